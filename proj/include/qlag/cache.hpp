#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "qlag/zeros.hpp"

namespace qlag {

/// Read-mostly memo for zero lists, keyed by (q, delta, shift, degree, P).
/// Concurrent reads share the lock; insertion is serialized.
class ZeroCache {
public:
    std::shared_ptr<const ZeroList> get(const PolySpec& spec, ExecPolicy policy) {
        const std::string key = make_key(spec);
        {
            std::shared_lock rd(mutex_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        auto computed = std::make_shared<const ZeroList>(zeros(spec, policy));
        std::unique_lock wr(mutex_);
        auto [it, inserted] = map_.emplace(key, std::move(computed));
        return it->second;
    }

    void clear() {
        std::unique_lock wr(mutex_);
        map_.clear();
    }

    std::size_t size() const {
        std::shared_lock rd(mutex_);
        return map_.size();
    }

    static ZeroCache& global() {
        static ZeroCache cache;
        return cache;
    }

private:
    static std::string make_key(const PolySpec& spec) {
        return spec.params.q.to_string() + "|" + spec.params.delta.to_string() + "|" +
               std::to_string(spec.shift) + "|" + std::to_string(spec.degree) + "|" +
               std::to_string(spec.params.precision);
    }

    mutable std::shared_mutex mutex_;
    std::map<std::string, std::shared_ptr<const ZeroList>> map_;
};

} // namespace qlag
