#include "lai/core.hpp"

#include <algorithm>

namespace lai {

std::string_view case_name(CaseKind kind) {
    switch (kind) {
        case CaseKind::Case1i: return "case1i";
        case CaseKind::Case1ii: return "case1ii";
        case CaseKind::Case2: return "case2";
        case CaseKind::Case3: return "case3";
        case CaseKind::Case4: return "case4";
        case CaseKind::Case5: return "case5";
    }
    return "unknown";
}

std::vector<Key> naive_scan(const Column& column, const RangeQuery& q) {
    std::vector<Key> out;
    for (Key x : column) {
        if (x >= q.l && x <= q.h) out.push_back(x);
    }
    return out;
}

bool same_multiset(std::vector<Key> a, std::vector<Key> b) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

}  // namespace lai
