#include "starfactor/weighting.hpp"

#include <algorithm>
#include <stdexcept>

#include "starfactor/star_factor.hpp"

namespace starfactor {

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> rref(std::vector<std::vector<Rat>>& rows, int cols) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        int pivot = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[r], rows[pivot]);
        Rat inv = rows[r][c];
        for (int j = c; j < cols; ++j) rows[r][j] /= inv;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat factor = rows[i][c];
            for (int j = c; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Kernel basis of the row space as columns-of-coefficients vectors: one
// basis vector per free column.
std::vector<std::vector<Rat>> kernel_basis(std::vector<std::vector<Rat>> rows, int cols) {
    std::vector<int> pivots = rref(rows, cols);
    std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> vec(static_cast<std::size_t>(cols), Rat(0));
        vec[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) vec[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(vec));
    }
    return basis;
}

struct Ineq {
    std::vector<Rat> a;  // a . t >= c
    Rat c;
};

// Eliminates variables last-to-first, keeping each stage for
// back-substitution. Returns nullopt when infeasible.
std::optional<std::vector<Rat>> fourier_motzkin(std::vector<Ineq> system, int nvars,
                                                std::size_t row_cap) {
    std::vector<std::vector<Ineq>> stages;
    for (int k = nvars - 1; k >= 0; --k) {
        stages.push_back(system);
        std::vector<Ineq> next;
        std::vector<const Ineq*> lower, upper;
        for (const Ineq& q : system) {
            if (q.a[k] > 0) lower.push_back(&q);
            else if (q.a[k] < 0) upper.push_back(&q);
            else next.push_back(q);
        }
        for (const Ineq* lo : lower)
            for (const Ineq* up : upper) {
                // conic combination cancelling t_k: (-up.a[k]) * lo + lo.a[k] * up
                Ineq r;
                r.a.resize(static_cast<std::size_t>(nvars), Rat(0));
                Rat cl = -up->a[k], cu = lo->a[k];
                for (int j = 0; j < k; ++j) r.a[j] = cl * lo->a[j] + cu * up->a[j];
                r.c = cl * lo->c + cu * up->c;
                next.push_back(std::move(r));
                if (next.size() > row_cap)
                    throw std::runtime_error("Fourier-Motzkin row cap exceeded");
            }
        system = std::move(next);
    }
    for (const Ineq& q : system)
        if (q.c > 0) return std::nullopt;  // 0 >= c with c > 0

    // Feasible: back-substitute a concrete point.
    std::vector<Rat> t(static_cast<std::size_t>(nvars), Rat(0));
    for (int k = 0; k < nvars; ++k) {
        const std::vector<Ineq>& stage = stages[static_cast<std::size_t>(nvars - 1 - k)];
        std::optional<Rat> lo, hi;
        for (const Ineq& q : stage) {
            if (q.a[k] == 0) continue;
            // Variables are assigned in reverse elimination order, so at this
            // stage everything below k is already fixed (and everything above
            // k was eliminated and has coefficient zero).
            Rat rest = q.c;
            for (int j = 0; j < k; ++j) rest -= q.a[j] * t[j];
            Rat bound = rest / q.a[k];
            if (q.a[k] > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else {
                if (!hi || bound < *hi) hi = bound;
            }
        }
        if (lo && hi) t[k] = (*lo + *hi) / 2;
        else if (lo) t[k] = *lo;
        else if (hi) t[k] = *hi;
    }
    return t;
}

}  // namespace

DifferenceSystem difference_system(const Graph& g, std::uint64_t factor_cap) {
    if (!has_star_factor(g)) throw std::invalid_argument("graph has no star-factor");
    DifferenceSystem out;
    out.edge_order = g.edges();
    const std::size_t m = out.edge_order.size();

    auto indicator = [&](const StarFactor& f) {
        std::vector<Rat> chi(m, Rat(0));
        for (const Edge& e : f.edges) {
            auto it = std::lower_bound(out.edge_order.begin(), out.edge_order.end(), e);
            chi[static_cast<std::size_t>(it - out.edge_order.begin())] = 1;
        }
        return chi;
    };

    StarFactorStream stream(g);
    std::optional<std::vector<Rat>> base;
    while (auto f = stream.next()) {
        if (out.factor_count == factor_cap) {
            out.truncated = true;
            break;
        }
        ++out.factor_count;
        std::vector<Rat> chi = indicator(*f);
        if (!base) {
            base = std::move(chi);
            continue;
        }
        std::vector<Rat> row(m);
        for (std::size_t j = 0; j < m; ++j) row[j] = chi[j] - (*base)[j];
        out.rows.push_back(std::move(row));
    }
    return out;
}

int rank(const DifferenceSystem& system) {
    std::vector<std::vector<Rat>> rows = system.rows;
    return static_cast<int>(rref(rows, static_cast<int>(system.edge_order.size())).size());
}

WeightingSolution solve_uniform_weighting(const Graph& g, WeightingOptions options) {
    WeightingSolution sol;
    if (!has_star_factor(g)) {
        sol.status = WeightingSolution::Status::NoFactor;
        return sol;
    }

    DifferenceSystem system = difference_system(g, options.factor_cap);
    sol.factor_count = system.factor_count;
    sol.truncated = system.truncated;
    const int m = static_cast<int>(system.edge_order.size());

    // Quick exit: constant weights already work iff all rows sum to zero.
    bool ones_work = true;
    for (const auto& row : system.rows) {
        Rat s = 0;
        for (const Rat& x : row) s += x;
        if (s != 0) {
            ones_work = false;
            break;
        }
    }

    std::vector<std::vector<Rat>> basis = kernel_basis(system.rows, m);
    sol.kernel_dimension = static_cast<int>(basis.size());

    if (ones_work && !system.truncated) {
        sol.status = WeightingSolution::Status::Feasible;
        sol.feasible = true;
        sol.weights = std::vector<Rat>(static_cast<std::size_t>(m), Rat(1));
        return sol;
    }

    // Positivity: does some kernel combination give every edge weight >= 1?
    const int d = static_cast<int>(basis.size());
    std::optional<std::vector<Rat>> point;
    if (d == 0) {
        // kernel is {0}; m == 0 means the zero-length weighting works
        if (m == 0 && !system.truncated) {
            sol.status = WeightingSolution::Status::Feasible;
            sol.feasible = true;
            sol.weights = std::vector<Rat>{};
            return sol;
        }
        point = std::nullopt;
    } else {
        std::vector<Ineq> ineqs;
        ineqs.reserve(static_cast<std::size_t>(m));
        for (int e = 0; e < m; ++e) {
            Ineq q;
            q.a.resize(static_cast<std::size_t>(d));
            for (int j = 0; j < d; ++j) q.a[j] = basis[static_cast<std::size_t>(j)][e];
            q.c = 1;
            ineqs.push_back(std::move(q));
        }
        point = fourier_motzkin(std::move(ineqs), d, options.fm_row_cap);
    }

    if (!point) {
        // Sound even when truncated: a row subset can only be more permissive.
        sol.status = WeightingSolution::Status::Infeasible;
        return sol;
    }
    if (system.truncated) {
        sol.status = WeightingSolution::Status::TruncatedInfeasibleOnly;
        return sol;
    }

    // Assemble w = basis . t, scale to coprime positive integers.
    std::vector<Rat> w(static_cast<std::size_t>(m), Rat(0));
    for (int j = 0; j < d; ++j)
        for (int e = 0; e < m; ++e) w[e] += (*point)[j] * basis[static_cast<std::size_t>(j)][e];
    Int scale = 1;
    for (const Rat& x : w) scale = lcm(scale, denominator(x));
    Int common = 0;
    for (Rat& x : w) {
        x *= scale;
        common = gcd(common, numerator(x));
    }
    if (common > 1)
        for (Rat& x : w) x /= common;
    for (const Rat& x : w)
        if (x <= 0) throw std::logic_error("positivity certificate failed verification");

    sol.status = WeightingSolution::Status::Feasible;
    sol.feasible = true;
    sol.weights = std::move(w);
    return sol;
}

}  // namespace starfactor
