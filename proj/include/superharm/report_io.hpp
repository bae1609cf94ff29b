#pragma once

// JSON and text renderings of reports. Both carry the same numbers; JSON keys keep
// insertion order so output is byte-stable.

#include "superharm/branching.hpp"
#include "superharm/gtbasis.hpp"
#include "superharm/harmonics.hpp"
#include "superharm/polytext.hpp"

#include "json.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace superharm {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

inline std::string ints_text(const std::vector<int>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + "]";
}

inline Json signature_json(SuperSignature sig) {
    return Json{{"m", sig.m}, {"n", sig.n}, {"M", sig.superdimension()}};
}

inline Json to_json(const FischerIndexSets& s) {
    return Json{{"N", s.N}, {"tildeJ", s.tildeJ}, {"J0", s.J0}, {"J", s.J}};
}

inline Json to_json(const DecompositionReport& r) {
    Json summands = Json::array();
    for (const auto& s : r.summands)
        summands.push_back({{"kind", to_string(s.kind)},
                            {"ell", s.ell},
                            {"r_exponent", s.r_exponent},
                            {"dim", s.dim},
                            {"trivial", s.trivial()}});
    return Json{{"signature", signature_json(r.sig)},
                {"k", r.k},
                {"rule", r.rule},
                {"dim_P", r.total_dim},
                {"index_sets", to_json(r.index_sets)},
                {"summands", summands},
                {"summand_dim_sum", r.summand_dim_sum},
                {"verified", r.verified},
                {"failure_witness", r.failure_witness ? Json(*r.failure_witness) : Json(nullptr)},
                {"notes", r.notes}};
}

inline std::string to_text(const DecompositionReport& r) {
    std::ostringstream os;
    os << "fischer " << to_string(r.sig) << " M=" << r.sig.superdimension() << " k=" << r.k
       << " dim_P=" << r.total_dim << " rule=" << r.rule << "\n";
    os << "  N=" << ints_text(r.index_sets.N) << " tildeJ=" << ints_text(r.index_sets.tildeJ)
       << " J0=" << ints_text(r.index_sets.J0) << " J=" << ints_text(r.index_sets.J) << "\n";
    for (const auto& s : r.summands)
        os << "  " << summand_text(s) << " dim=" << s.dim << (s.trivial() ? " (trivial)" : "") << "\n";
    os << "  summand_dim_sum=" << r.summand_dim_sum << " verified=" << (r.verified ? "true" : "false") << "\n";
    if (r.failure_witness) os << "  witness: " << *r.failure_witness << "\n";
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
    return os.str();
}

inline Json checks_json(const std::vector<NamedCheck>& checks) {
    Json out = Json::array();
    for (const auto& c : checks) out.push_back({{"name", c.name}, {"passed", c.passed}});
    return out;
}

inline Json to_json(const TheoremAReport& r) {
    return Json{{"signature", signature_json(r.sig)},
                {"k", r.k},
                {"exceptional", r.exceptional},
                {"dim_P", r.dim_P},
                {"dim_H", r.dim_H},
                {"dim_Htilde", r.dim_Htilde},
                {"dim_H0", r.dim_H0},
                {"mirror_degree", r.mirror_degree ? Json(*r.mirror_degree) : Json(nullptr)},
                {"dim_mirror", r.dim_mirror},
                {"quotient_dim", r.quotient_dim},
                {"checks", checks_json(r.checks)},
                {"notes", r.notes},
                {"verified", r.verified}};
}

inline Json to_json(const BranchingReport& r) {
    Json summands = Json::array();
    for (const auto& s : r.summands)
        summands.push_back(
            {{"kind", to_string(s.kind)}, {"ell", s.ell}, {"multiplicity", s.multiplicity}, {"dim", s.dim}});
    Json sets = nullptr;
    if (r.mode != BranchMode::Generalized)
        sets = Json{{"tildeB", r.index_sets.tildeB}, {"B0", r.index_sets.B0}, {"B", r.index_sets.B}};
    return Json{{"signature", signature_json(r.sig)},
                {"k", r.k},
                {"mode", to_string(r.mode)},
                {"index_sets", sets},
                {"summands", summands},
                {"lhs_dim", r.lhs_dim},
                {"rhs_dim", r.rhs_dim},
                {"checks", checks_json(r.checks)},
                {"notes", r.notes},
                {"verified", r.verified}};
}

inline std::string to_text(const BranchingReport& r) {
    std::ostringstream os;
    os << "branch " << to_string(r.sig) << " M=" << r.sig.superdimension() << " k=" << r.k
       << " mode=" << to_string(r.mode) << "\n";
    if (r.mode != BranchMode::Generalized)
        os << "  tildeB=" << ints_text(r.index_sets.tildeB) << " B0=" << ints_text(r.index_sets.B0)
           << " B=" << ints_text(r.index_sets.B) << "\n";
    for (const auto& s : r.summands)
        os << "  " << s.multiplicity << " x " << to_string(s.kind) << "_" << s.ell << " (hyperplane) dim=" << s.dim
           << "\n";
    os << "  lhs_dim=" << r.lhs_dim << " rhs_dim=" << r.rhs_dim << "\n";
    for (const auto& c : r.checks) os << "  check " << (c.passed ? "ok  " : "FAIL") << " " << c.name << "\n";
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
    os << "  verified=" << (r.verified ? "true" : "false") << "\n";
    return os.str();
}

inline Json to_json(const GTLabel& label) {
    Json chain = Json::array();
    for (const auto& r : label.chain)
        chain.push_back({{"level", r.level}, {"kind", to_string(r.kind)}, {"ell", r.ell}});
    return chain;
}

inline Json to_json(const GTBasis& b) {
    Json elements = Json::array();
    for (const auto& e : b.elements)
        elements.push_back(
            {{"label", to_json(e.label)}, {"label_text", to_string(e.label)}, {"polynomial", to_text(e.polynomial)}});
    return Json{{"signature", signature_json(b.sig)},
                {"k", b.k},
                {"target", to_string(b.target)},
                {"dimension", b.elements.size()},
                {"elements", elements},
                {"kernel_fallbacks", b.kernel_fallbacks}};
}

/// One "LABEL<TAB>polynomial" line per element.
inline std::string to_text(const GTBasis& b) {
    std::string out;
    for (const auto& e : b.elements) out += to_string(e.label) + "\t" + to_text(e.polynomial) + "\n";
    return out;
}

} // namespace superharm
