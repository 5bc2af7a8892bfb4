#include "qvl/scattering.hpp"

#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "qbinom_memo.hpp"

namespace qvl {

using detail::qbinom_memo;

namespace {

bool primitive(const Vec2& v) { return std::gcd(std::abs(v.x), std::abs(v.y)) == 1; }

TExp texp_add(const TExp& a, const TExp& b, int k = 1) {
    return {a[0] + k * b[0], a[1] + k * b[1], a[2] + k * b[2], a[3] + k * b[3]};
}

}  // namespace

Wall::Wall(Vec2 rho_, TExp t_exp_) : rho(rho_), t_exp(t_exp_) {
    if (!primitive(rho)) throw std::invalid_argument("Wall: direction exponent must be primitive");
}

Wall scatter_simple(const Wall& w1, const Wall& w2) {
    const long long d = det(w1.rho, w2.rho);
    if (d != 1 && d != -1)
        throw std::domain_error("scatter_simple: directions must span the lattice");
    // rho1 + rho2 is primitive: any common factor would divide det = +-1
    return Wall({w1.rho.x + w2.rho.x, w1.rho.y + w2.rho.y}, texp_add(w1.t_exp, w2.t_exp));
}

std::vector<Wall> scatter_infinite(const Wall& w1, const Wall& w2, int n_max) {
    const long long d = det(w1.rho, w2.rho);
    if (d != 2 && d != -2)
        throw std::domain_error("scatter_infinite: directions must have index-2 span");
    if (n_max < 1) throw std::domain_error("scatter_infinite: n_max must be >= 1");
    std::vector<Wall> out;
    out.reserve(2 * static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        // (n+1)rho1 + n rho2 and n rho1 + (n+1)rho2; both primitive since a
        // common factor would divide both det multiples n and n+1
        out.emplace_back(Vec2{(n + 1) * w1.rho.x + n * w2.rho.x, (n + 1) * w1.rho.y + n * w2.rho.y},
                         texp_add(texp_add({0, 0, 0, 0}, w1.t_exp, n + 1), w2.t_exp, n));
        out.emplace_back(Vec2{n * w1.rho.x + (n + 1) * w2.rho.x, n * w1.rho.y + (n + 1) * w2.rho.y},
                         texp_add(texp_add({0, 0, 0, 0}, w1.t_exp, n), w2.t_exp, n + 1));
    }
    return out;
}

namespace {

Wall tuple_wall(int label, int n) {
    switch (label) {
        case 1: return Wall({-1, 2 * (n - 1)}, {n + 1, n, 1, 1});
        case 2: return Wall({-1, 2 * (n - 1)}, {n, n - 1, 0, 0});
        case 3: return Wall({-1, 2 * n - 3}, {n, n - 1, 0, 1});
        default: return Wall({-1, 2 * n - 3}, {n, n - 1, 1, 0});
    }
}

}  // namespace

std::vector<Wall> wall_catalog(int n_max) {
    if (n_max < 1) throw std::domain_error("wall_catalog: n_max must be >= 1");
    std::vector<Wall> out;
    out.reserve(4 * static_cast<size_t>(n_max));
    for (int n = n_max; n >= 1; --n)
        for (int label = 1; label <= 4; ++label) out.push_back(tuple_wall(label, n));
    return out;
}

std::string wall_catalog_text(int n_max) {
    std::ostringstream os;
    const std::vector<Wall> walls = wall_catalog(n_max);
    for (size_t i = 0; i < walls.size(); ++i) {
        const int n = n_max - static_cast<int>(i) / 4;
        const int label = static_cast<int>(i) % 4 + 1;
        const Wall& w = walls[i];
        os << "n=" << n << " label=W" << label << " rho=(" << w.rho.x << "," << w.rho.y << ")"
           << " t=(" << w.t_exp[0] << "," << w.t_exp[1] << "," << w.t_exp[2] << "," << w.t_exp[3]
           << ")\n";
    }
    return os.str();
}

std::vector<TrackedMonomial> cross_wall(const TrackedMonomial& m, const Wall& w) {
    const long long dt = std::llabs(det(w.rho, m.z_exp));
    if (dt == 0) return {m};
    std::vector<TrackedMonomial> out;
    out.reserve(static_cast<size_t>(dt) + 1);
    out.push_back(m);
    for (int k = 1; k <= dt; ++k) {
        TrackedMonomial b;
        b.coeff = m.coeff * qbinom_memo(static_cast<int>(dt), k);
        b.t_exp = texp_add(m.t_exp, w.t_exp, k);
        b.z_exp = {m.z_exp.x + k * w.rho.x, m.z_exp.y + k * w.rho.y};
        out.push_back(std::move(b));
    }
    return out;
}

LaurentPoly trace_nlog(const CurveClass& d, const TraceOptions& opt) {
    auto [w1, w2] = inter(d);
    if (w1 <= 0 || w2 <= 0)
        throw std::domain_error("trace_nlog: needs positive intersection with both divisors");
    if (d.d0 < 1) return {};

    const TExp target{d.d0, d.d0 - d.d1, d.d0 - d.d2, d.d0 - d.d3};
    const Vec2 z_target{-d.d1, -2 * d.d1};
    const auto exceeds = [&](const TExp& t) {
        for (int i = 0; i < 4; ++i)
            if (t[static_cast<size_t>(i)] > target[static_cast<size_t>(i)]) return true;
        return false;
    };

    using Key = std::tuple<TExp, int, int>;
    std::map<Key, LaurentPoly> branches;
    branches[{TExp{0, 0, 0, 0}, 0, -w2}] = LaurentPoly(1);

    const std::vector<Wall> walls = wall_catalog(d.d0 + opt.extra_depth);
    for (size_t i = 0; i < walls.size(); ++i) {
        const Wall& w = walls[i];
        std::map<Key, LaurentPoly> next;
        for (const auto& [key, coeff] : branches) {
            const TExp& t = std::get<0>(key);
            const Vec2 z{std::get<1>(key), std::get<2>(key)};
            const long long dt = std::llabs(det(w.rho, z));
            // Crossing with multiplicity k is the k-th branch of cross_wall;
            // every catalog direction has x-component -1, so the z x-exponent
            // only ever decreases. Branches that drop below the target
            // x-exponent can never come back and are dead whether or not the
            // t-exponent heuristic is on, so the multiplicity is capped by
            // the remaining x-budget before any coefficient is built.
            const long long k_max = std::min(dt, static_cast<long long>(z.x - z_target.x));
            for (long long k = 0; k <= k_max; ++k) {
                const TExp bt = texp_add(t, w.t_exp, static_cast<int>(k));
                if (opt.prune && exceeds(bt)) continue;
                const int bx = z.x + static_cast<int>(k) * w.rho.x;
                const int by = z.y + static_cast<int>(k) * w.rho.y;
                if (k == 0)
                    next[{bt, bx, by}] += coeff;
                else
                    next[{bt, bx, by}] +=
                        coeff * qbinom_memo(static_cast<int>(dt), static_cast<int>(k));
            }
        }
        branches = std::move(next);
        if (opt.debug) {
            const int n = (d.d0 + opt.extra_depth) - static_cast<int>(i) / 4;
            *opt.debug << "n=" << n << " label=W" << (static_cast<int>(i) % 4 + 1) << " rho=("
                       << w.rho.x << "," << w.rho.y << ") live=" << branches.size() << "\n";
        }
        if (branches.empty()) break;
    }

    LaurentPoly total;
    for (const auto& [key, coeff] : branches)
        if (std::get<0>(key) == target && std::get<1>(key) == z_target.x &&
            std::get<2>(key) == z_target.y)
            total += coeff;
    return total;
}

}  // namespace qvl
