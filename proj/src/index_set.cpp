#include "exdef/index_set.hpp"

namespace exdef {

namespace {

void fill(IndexSet current, int next, int remaining, int var_count,
          std::vector<IndexSet>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int v = next; v + remaining - 1 <= var_count; ++v)
        fill(current.with(v), v + 1, remaining - 1, var_count, out);
}

}  // namespace

std::vector<IndexSet> index_sets_of_size(int var_count, int size) {
    std::vector<IndexSet> out;
    if (size < 0 || size > var_count) return out;
    fill(IndexSet{}, 1, size, var_count, out);
    return out;
}

}  // namespace exdef
