#include "exdef/multi_index.hpp"

namespace exdef {

namespace {

void fill(MultiIndex& current, int var, int remaining, int var_count,
          std::vector<MultiIndex>& out) {
    if (var == var_count) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    // last variable absorbs whatever is left
    if (var == var_count - 1) {
        MultiIndex m = current;
        for (int i = 0; i < remaining; ++i) m = m.plus(var_count);
        out.push_back(m);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        MultiIndex m = current;
        for (int i = 0; i < e; ++i) m = m.plus(var + 1);
        fill(m, var + 1, remaining - e, var_count, out);
    }
}

}  // namespace

std::vector<MultiIndex> monomials_of_degree(int var_count, int degree) {
    std::vector<MultiIndex> out;
    if (degree < 0) return out;
    MultiIndex start(var_count);
    fill(start, 0, degree, var_count, out);
    return out;
}

}  // namespace exdef
