#include "rlbwt_merge/context_extract.hpp"

#include <algorithm>

namespace rlm {

namespace {

// circular comparison with the len(a)+len(b) cap
std::weak_ordering compare_circular(const std::vector<symbol>& a,
                                    const std::vector<symbol>& b) {
    const std::size_t la = a.size(), lb = b.size();
    for (std::size_t k = 0; k < la + lb; ++k) {
        symbol x = a[k % la];
        symbol y = b[k % lb];
        if (x != y)
            return x <=> y;
    }
    return std::weak_ordering::equivalent;
}

} // namespace

string_context_source string_context_source::from_strings(
    const std::vector<std::string>& texts) {
    string_context_source src;
    for (const std::string& t : texts) {
        if (t.empty())
            throw std::invalid_argument("string_context_source: empty string");
        std::vector<symbol> syms;
        syms.reserve(t.size());
        for (char c : t)
            syms.push_back(symbol(c));
        src.total_ += syms.size();
        src.strings_.push_back(std::move(syms));
    }
    std::stable_sort(src.strings_.begin(), src.strings_.end(),
                     [](const std::vector<symbol>& a, const std::vector<symbol>& b) {
                         return compare_circular(a, b) == std::weak_ordering::less;
                     });
    return src;
}

} // namespace rlm
