#include "alphaham/ramsey.hpp"

#include <algorithm>
#include <limits>

namespace alphaham {

uint64_t binomial(int n, int k) {
    if (n < 0 || n > 64) throw PreconditionError("binomial table limited to n <= 64");
    if (k < 0 || k > n) return 0;
    static std::vector<std::vector<uint64_t>> table = [] {
        std::vector<std::vector<uint64_t>> t(65);
        for (int i = 0; i <= 64; ++i) {
            t[i].assign(i + 1, 1);
            for (int j = 1; j < i; ++j) {
                uint64_t a = t[i - 1][j - 1], b = t[i - 1][j];
                if (a > std::numeric_limits<uint64_t>::max() - b)
                    throw PreconditionError("binomial overflow");
                t[i][j] = a + b;
            }
        }
        return t;
    }();
    return table[n][k];
}

namespace {

CliqueOrIS extract_rec(const Graph& g, std::vector<int> verts, int r, int s, RamseyStats& st, int depth) {
    st.depth = std::max(st.depth, depth);
    int v = verts.front();  // lowest id: verts kept sorted
    if (r == 1) return {CliqueOrIS::Tag::Independent, {v}};
    if (s == 1) return {CliqueOrIS::Tag::Clique, {v}};

    std::vector<int> a, b;
    for (size_t i = 1; i < verts.size(); ++i) {
        ++st.inspections;
        (g.adjacent(v, verts[i]) ? a : b).push_back(verts[i]);
    }
    uint64_t need_a = binomial(r + s - 3, r - 1);
    if (a.size() >= need_a) {
        CliqueOrIS sub = extract_rec(g, std::move(a), r, s - 1, st, depth + 1);
        if (sub.tag == CliqueOrIS::Tag::Clique) {
            sub.members.insert(sub.members.begin(), v);
        }
        return sub;
    }
    CliqueOrIS sub = extract_rec(g, std::move(b), r - 1, s, st, depth + 1);
    if (sub.tag == CliqueOrIS::Tag::Independent) {
        sub.members.insert(sub.members.begin(), v);
    }
    return sub;
}

}  // namespace

CliqueOrIS ramsey_extract(const Graph& g, int r, int s, RamseyStats* stats) {
    if (r < 1 || s < 1) throw PreconditionError("ramsey parameters must be >= 1");
    if (r + s > 64) throw PreconditionError("ramsey parameters too large (r+s > 64)");
    uint64_t need = binomial(r + s - 2, r - 1);
    if (uint64_t(g.n()) < need)
        throw PreconditionError("graph too small: need " + std::to_string(need) + " vertices for (r,s)=(" +
                                std::to_string(r) + "," + std::to_string(s) + "), have " + std::to_string(g.n()));

    RamseyStats local;
    RamseyStats& st = stats ? *stats : local;
    st.inspections += g.n();
    std::vector<int> all(g.n());
    for (int i = 0; i < g.n(); ++i) all[i] = i;
    CliqueOrIS out = extract_rec(g, std::move(all), r, s, st, 1);

    std::sort(out.members.begin(), out.members.end());
    // Never trust the recursion: re-check the certificate.
    if (out.tag == CliqueOrIS::Tag::Clique) {
        if (int(out.members.size()) != s || !is_clique(g, out.members))
            throw StructureError("ramsey extraction produced an invalid clique");
    } else {
        if (int(out.members.size()) != r || !is_independent_set(g, out.members))
            throw StructureError("ramsey extraction produced an invalid independent set");
    }
    return out;
}

}  // namespace alphaham
