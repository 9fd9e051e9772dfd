#include "twocoh/group_core.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace twocoh {

std::optional<AxiomViolation> FiniteGroup::validate_table(
    const std::vector<std::vector<long>>& table) {
    const long n = static_cast<long>(table.size());
    if (n == 0) return AxiomViolation{"shape", {}};
    for (long a = 0; a < n; ++a) {
        if (static_cast<long>(table[a].size()) != n) return AxiomViolation{"shape", {a}};
        for (long b = 0; b < n; ++b)
            if (table[a][b] < 0 || table[a][b] >= n) return AxiomViolation{"closure", {a, b}};
    }
    for (long a = 0; a < n; ++a) {
        if (table[0][a] != a) return AxiomViolation{"identity", {0, a}};
        if (table[a][0] != a) return AxiomViolation{"identity", {a, 0}};
    }
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            for (long c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    return AxiomViolation{"associativity", {a, b, c}};
    for (long a = 0; a < n; ++a) {
        bool has_inverse = false;
        for (long b = 0; b < n && !has_inverse; ++b)
            has_inverse = table[a][b] == 0 && table[b][a] == 0;
        if (!has_inverse) return AxiomViolation{"inverses", {a}};
    }
    return std::nullopt;
}

FiniteGroup::FiniteGroup(std::vector<std::vector<long>> table) : table_(std::move(table)) {
    const long n = order();
    inverse_.assign(static_cast<std::size_t>(n), 0);
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            if (table_[a][b] == 0) inverse_[a] = b;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<long>> table) {
    if (auto v = validate_table(table))
        throw Error("not a group table: axiom '" + v->axiom + "' fails");
    return FiniteGroup(std::move(table));
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(long n) {
    if (n < 1) throw RangeError("cyclic group order must be positive");
    std::vector<std::vector<long>> table(static_cast<std::size_t>(n),
                                         std::vector<long>(static_cast<std::size_t>(n)));
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    return FiniteGroup(std::move(table));
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<long>>& generators) {
    if (generators.empty()) throw RangeError("need at least one generator");
    const std::size_t points = generators[0].size();
    for (const auto& g : generators) {
        if (g.size() != points) throw ShapeError("generators act on different point sets");
        std::vector<bool> seen(points, false);
        for (long v : g) {
            if (v < 0 || static_cast<std::size_t>(v) >= points || seen[v])
                throw Error("generator is not a permutation");
            seen[v] = true;
        }
    }
    auto compose = [](const std::vector<long>& a, const std::vector<long>& b) {
        // "apply a first, then b"
        std::vector<long> c(a.size());
        for (std::size_t x = 0; x < a.size(); ++x) c[x] = b[static_cast<std::size_t>(a[x])];
        return c;
    };
    std::vector<long> identity(points);
    std::iota(identity.begin(), identity.end(), 0);
    std::vector<std::vector<long>> elems{identity};
    std::map<std::vector<long>, long> index{{identity, 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& gen : generators) {
            auto next = compose(elems[head], gen);
            if (index.emplace(next, static_cast<long>(elems.size())).second)
                elems.push_back(std::move(next));
        }
    }
    const long n = static_cast<long>(elems.size());
    std::vector<std::vector<long>> table(static_cast<std::size_t>(n),
                                         std::vector<long>(static_cast<std::size_t>(n)));
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
    return FiniteGroup(std::move(table));
}

FiniteGroup FiniteGroup::dihedral(long n) {
    if (n < 1) throw RangeError("dihedral parameter must be positive");
    if (n == 1) return cyclic(2);
    std::vector<long> rotation(static_cast<std::size_t>(n)), reflection(static_cast<std::size_t>(n));
    for (long x = 0; x < n; ++x) {
        rotation[x] = (x + 1) % n;
        reflection[x] = (n - x) % n;
    }
    return from_permutations({rotation, reflection});
}

FiniteGroup FiniteGroup::symmetric(long n) {
    if (n < 1) throw RangeError("symmetric group needs at least one letter");
    if (n == 1) return trivial();
    std::vector<long> transposition(static_cast<std::size_t>(n)), cycle(static_cast<std::size_t>(n));
    std::iota(transposition.begin(), transposition.end(), 0);
    std::swap(transposition[0], transposition[1]);
    for (long x = 0; x < n; ++x) cycle[x] = (x + 1) % n;
    return from_permutations({transposition, cycle});
}

CrossedModule::CrossedModule(FiniteGroup G, FiniteGroup H, std::vector<long> i_map,
                             std::vector<std::vector<long>> action)
    : G_(std::move(G)), H_(std::move(H)), i_(std::move(i_map)), action_(std::move(action)) {
    const auto ng = static_cast<std::size_t>(G_.order());
    const auto nh = static_cast<std::size_t>(H_.order());
    if (i_.size() != ng) throw ShapeError("i_map must have one entry per element of G");
    for (long h : i_)
        if (h < 0 || h >= H_.order()) throw IndexError("i_map value out of range");
    if (action_.size() != ng) throw ShapeError("action must have one row per element of G");
    for (const auto& row : action_) {
        if (row.size() != nh) throw ShapeError("action row must have one entry per element of H");
        for (long g : row)
            if (g < 0 || g >= G_.order()) throw IndexError("action value out of range");
    }
}

std::vector<AxiomViolation> CrossedModule::validate() const {
    std::vector<AxiomViolation> out;
    const long ng = G_.order(), nh = H_.order();
    auto first = [&](const std::string& axiom, auto&& probe) {
        if (auto w = probe()) out.push_back(AxiomViolation{axiom, *w});
    };
    using W = std::optional<std::vector<long>>;
    first("i_hom", [&]() -> W {
        for (long a = 0; a < ng; ++a)
            for (long b = 0; b < ng; ++b)
                if (i(G_.mul(a, b)) != H_.mul(i(a), i(b))) return {{a, b}};
        return std::nullopt;
    });
    first("action_identity", [&]() -> W {
        for (long g = 0; g < ng; ++g)
            if (act(g, FiniteGroup::id) != g) return {{g}};
        return std::nullopt;
    });
    first("action_composition", [&]() -> W {
        for (long g = 0; g < ng; ++g)
            for (long h1 = 0; h1 < nh; ++h1)
                for (long h2 = 0; h2 < nh; ++h2)
                    if (act(act(g, h1), h2) != act(g, H_.mul(h1, h2))) return {{g, h1, h2}};
        return std::nullopt;
    });
    first("action_automorphism", [&]() -> W {
        for (long a = 0; a < ng; ++a)
            for (long b = 0; b < ng; ++b)
                for (long h = 0; h < nh; ++h)
                    if (act(G_.mul(a, b), h) != G_.mul(act(a, h), act(b, h))) return {{a, b, h}};
        return std::nullopt;
    });
    first("equivariance", [&]() -> W {
        for (long g = 0; g < ng; ++g)
            for (long h = 0; h < nh; ++h)
                if (i(act(g, h)) != H_.mul(H_.mul(H_.inv(h), i(g)), h)) return {{g, h}};
        return std::nullopt;
    });
    first("peiffer", [&]() -> W {
        for (long a = 0; a < ng; ++a)
            for (long b = 0; b < ng; ++b)
                if (act(a, i(b)) != G_.mul(G_.mul(G_.inv(b), a), b)) return {{a, b}};
        return std::nullopt;
    });
    return out;
}

Arrow vmul(const CrossedModule& xm, const Arrow& a, const Arrow& b) {
    return Arrow{xm.G().mul(xm.act(a.g, b.h), b.g), xm.H().mul(a.h, b.h)};
}

Arrow vinv(const CrossedModule& xm, const Arrow& a) {
    const long hinv = xm.H().inv(a.h);
    return Arrow{xm.G().inv(xm.act(a.g, hinv)), hinv};
}

Arrow multiprod(const CrossedModule& xm, const std::vector<Arrow>& rows) {
    // Closed form: g-part is the product of the g_k twisted by the h-suffix
    // h_{k+1}...h_q, h-part is h_1...h_q. Built from the right so each g sees
    // exactly the h's after it.
    long gacc = FiniteGroup::id, hsuf = FiniteGroup::id;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        gacc = xm.G().mul(xm.act(it->g, hsuf), gacc);
        hsuf = xm.H().mul(it->h, hsuf);
    }
    return Arrow{gacc, hsuf};
}

long arrow_target(const CrossedModule& xm, const Arrow& a) {
    return xm.H().mul(a.h, xm.i(a.g));
}

Arrow arrow_iota(const CrossedModule& xm, const Arrow& a) {
    return Arrow{xm.G().inv(a.g), arrow_target(xm, a)};
}

Arrow hcomp(const CrossedModule& xm, const Arrow& a, const Arrow& b) {
    if (arrow_source(a) != arrow_target(xm, b))
        throw ComposabilityError("horizontal composition needs s(first) = t(second)");
    return Arrow{xm.G().mul(b.g, a.g), b.h};
}

NervePoint face_p(const CrossedModule& xm, long k, const NervePoint& x) {
    const long l = x.level();
    if (k < 0 || k > l) throw IndexError("face index out of range");
    if (l == 0) throw IndexError("level-0 point has no faces");
    NervePoint y;
    y.h = x.h;
    y.gs.reserve(static_cast<std::size_t>(l - 1));
    if (k == 0) {
        y.gs.assign(x.gs.begin() + 1, x.gs.end());
    } else if (k == l) {
        y.gs.assign(x.gs.begin(), x.gs.end() - 1);
        y.h = xm.H().mul(x.h, xm.i(x.gs.back()));
    } else {
        // Merge slots k-1 and k (0-based) in reversed order g_{k+1} g_k; this
        // is what horizontal composition of the adjacent arrows produces.
        for (long j = 0; j < l; ++j) {
            if (j == k - 1) continue;
            long g = x.gs[static_cast<std::size_t>(j)];
            if (j == k) g = xm.G().mul(g, x.gs[static_cast<std::size_t>(k - 1)]);
            y.gs.push_back(g);
        }
    }
    return y;
}

long final_target(const CrossedModule& xm, const NervePoint& x) {
    long acc = FiniteGroup::id;
    for (auto it = x.gs.rbegin(); it != x.gs.rend(); ++it) acc = xm.G().mul(acc, *it);
    return xm.H().mul(x.h, xm.i(acc));
}

Arrow nerve_arrow(const CrossedModule& xm, const NervePoint& x, long j) {
    const long l = x.level();
    if (j < 0 || j >= l) throw IndexError("arrow index out of range");
    long acc = FiniteGroup::id;  // g_p g_{p-1} ... g_{j+2}, empty for the last arrow
    for (long t = l - 1; t > j; --t) acc = xm.G().mul(acc, x.gs[static_cast<std::size_t>(t)]);
    return Arrow{x.gs[static_cast<std::size_t>(j)], xm.H().mul(x.h, xm.i(acc))};
}

NervePoint nerve_from_arrows(const CrossedModule& xm, const std::vector<Arrow>& arrows) {
    NervePoint x;
    if (arrows.empty()) throw RangeError("need the base point h for an empty chain");
    for (std::size_t j = 0; j + 1 < arrows.size(); ++j)
        if (arrow_source(arrows[j]) != arrow_target(xm, arrows[j + 1]))
            throw ComposabilityError("arrows are not composable");
    for (const Arrow& a : arrows) x.gs.push_back(a.g);
    x.h = arrows.back().h;
    return x;
}

NervePoint nerve_vmul(const CrossedModule& xm, const NervePoint& x, const NervePoint& y) {
    const long l = x.level();
    if (l != y.level()) throw ShapeError("vertical product needs level-matched nerve points");
    if (l == 0) return NervePoint{{}, xm.H().mul(x.h, y.h)};
    // Multiply slotwise; the slotwise product of composable chains is again
    // composable because source and target are homomorphisms for the product.
    std::vector<Arrow> arrows;
    arrows.reserve(static_cast<std::size_t>(l));
    for (long j = 0; j < l; ++j)
        arrows.push_back(vmul(xm, nerve_arrow(xm, x, j), nerve_arrow(xm, y, j)));
    return nerve_from_arrows(xm, arrows);
}

std::vector<long> group_face(const FiniteGroup& g, long k, const std::vector<long>& tuple) {
    const long n = static_cast<long>(tuple.size());
    if (k < 0 || k > n) throw IndexError("face index out of range");
    if (n == 0) throw IndexError("empty tuple has no faces");
    std::vector<long> out;
    out.reserve(static_cast<std::size_t>(n - 1));
    if (k == 0) {
        out.assign(tuple.begin() + 1, tuple.end());
    } else if (k == n) {
        out.assign(tuple.begin(), tuple.end() - 1);
    } else {
        for (long j = 0; j < n; ++j) {
            if (j == k) continue;
            long v = tuple[static_cast<std::size_t>(j)];
            if (j == k - 1) v = g.mul(v, tuple[static_cast<std::size_t>(k)]);
            out.push_back(v);
        }
    }
    return out;
}

GridDomain::GridDomain(const CrossedModule& xm, long p, long q, long r)
    : xm_(&xm), p_(p), q_(q), r_(r) {
    if (p < 0 || q < 0 || r < 0) throw RangeError("grid degrees must be nonnegative");
    const auto ng = static_cast<std::size_t>(xm.G().order());
    const auto nh = static_cast<std::size_t>(xm.H().order());
    constexpr std::size_t cap = std::size_t{1} << 48;
    size_ = 1;
    auto grow = [&](std::size_t base) {
        if (base != 0 && size_ > cap / base) throw RangeError("grid domain too large");
        size_ *= base;
    };
    for (long i = 0; i < p * q + r; ++i) grow(ng);
    for (long i = 0; i < q; ++i) grow(nh);
}

std::size_t GridDomain::encode(const GridPoint& pt) const {
    if (static_cast<long>(pt.rows.size()) != q_ || static_cast<long>(pt.fs.size()) != r_)
        throw ShapeError("grid point shape does not match the domain");
    const auto ng = static_cast<std::size_t>(xm_->G().order());
    const auto nh = static_cast<std::size_t>(xm_->H().order());
    std::size_t index = 0, stride = 1;
    auto push = [&](long digit, std::size_t base) {
        index += static_cast<std::size_t>(digit) * stride;
        stride *= base;
    };
    for (const NervePoint& row : pt.rows) {
        if (row.level() != p_) throw ShapeError("grid point row has the wrong level");
        for (long g : row.gs) push(g, ng);
        push(row.h, nh);
    }
    for (long f : pt.fs) push(f, ng);
    return index;
}

GridPoint GridDomain::decode(std::size_t index) const {
    if (index >= size_) throw IndexError("grid point index out of range");
    const auto ng = static_cast<std::size_t>(xm_->G().order());
    const auto nh = static_cast<std::size_t>(xm_->H().order());
    auto pull = [&](std::size_t base) {
        long digit = static_cast<long>(index % base);
        index /= base;
        return digit;
    };
    GridPoint pt;
    pt.rows.resize(static_cast<std::size_t>(q_));
    for (NervePoint& row : pt.rows) {
        row.gs.resize(static_cast<std::size_t>(p_));
        for (long& g : row.gs) g = pull(ng);
        row.h = pull(nh);
    }
    pt.fs.resize(static_cast<std::size_t>(r_));
    for (long& f : pt.fs) f = pull(ng);
    return pt;
}

}  // namespace twocoh
