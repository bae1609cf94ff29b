#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace superharm::detail {

/// Write-once cache. Values are built outside the lock so builders may recurse into
/// the same cache; a lost race just discards the duplicate.
template <class Key, class Value>
class Memo {
public:
    template <class Make>
    const Value& get(const Key& key, Make&& make) {
        {
            std::lock_guard lock(mutex_);
            auto it = map_.find(key);
            if (it != map_.end()) return *it->second;
        }
        auto value = std::make_shared<const Value>(make());
        std::lock_guard lock(mutex_);
        auto [it, _] = map_.try_emplace(key, std::move(value));
        return *it->second;
    }

private:
    std::mutex mutex_;
    std::map<Key, std::shared_ptr<const Value>> map_;
};

} // namespace superharm::detail
