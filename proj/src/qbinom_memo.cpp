#include "qbinom_memo.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "qvl/qcomb.hpp"

namespace qvl::detail {

namespace {
std::shared_mutex mutex;
// node-based map: references stay valid across inserts
std::map<std::pair<int, int>, LaurentPoly> table;
}  // namespace

const LaurentPoly& qbinom_memo(int n, int m) {
    const std::pair<int, int> key{n, m};
    {
        std::shared_lock lock(mutex);
        auto it = table.find(key);
        if (it != table.end()) return it->second;
    }
    LaurentPoly value = qbinom(n, m);
    std::unique_lock lock(mutex);
    return table.try_emplace(key, std::move(value)).first->second;
}

const LaurentPoly& qbinom_ext_memo(int n, int m) {
    if (n >= 0 || m < 0) return qbinom_memo(n, m);
    static std::shared_mutex ext_mutex;
    static std::map<std::pair<int, int>, LaurentPoly> ext_table;
    const std::pair<int, int> key{n, m};
    {
        std::shared_lock lock(ext_mutex);
        auto it = ext_table.find(key);
        if (it != ext_table.end()) return it->second;
    }
    LaurentPoly value = qbinom_ext(n, m);
    std::unique_lock lock(ext_mutex);
    return ext_table.try_emplace(key, std::move(value)).first->second;
}

}  // namespace qvl::detail
