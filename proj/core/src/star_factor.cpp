#include "starfactor/star_factor.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace starfactor {

bool is_star_factor(const Graph& g, const EdgeSet& edges) {
    const int n = g.vertex_count();
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const Edge& e : edges) {
        if (!g.has_edge(e.u, e.v))
            throw std::invalid_argument("edge " + to_string(e) + " is not in the graph");
        ++deg[e.u];
        ++deg[e.v];
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (int v = 0; v < n; ++v)
        if (deg[v] == 0) return false;  // not spanning

    // each component must be a tree with at most one vertex of degree >= 2
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> comp;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        comp.clear();
        comp.push_back(s);
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int u : adj[comp[i]])
                if (!seen[u]) {
                    seen[u] = 1;
                    comp.push_back(u);
                }
        int edge_twice = 0, branch = 0;
        for (int v : comp) {
            edge_twice += deg[v];
            if (deg[v] >= 2) ++branch;
        }
        if (edge_twice / 2 != static_cast<int>(comp.size()) - 1) return false;  // cycle
        if (branch > 1) return false;                                           // not a star
    }
    return true;
}

StarFactorStream::StarFactorStream(const Graph& g, std::optional<int> max_star_size)
    : n_(g.vertex_count()), edges_(g.edges()) {
    if (max_star_size) {
        if (*max_star_size < 1) throw std::invalid_argument("max_star_size must be >= 1");
        bound_ = *max_star_size;
    }
    last_incident_.assign(static_cast<std::size_t>(n_), -1);
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        last_incident_[edges_[i].u] = i;
        last_incident_[edges_[i].v] = i;
    }
    state_.assign(static_cast<std::size_t>(n_), VState::Un);
    partner_.assign(static_cast<std::size_t>(n_), -1);
    nsat_.assign(static_cast<std::size_t>(n_), 0);
    uncovered_ = n_;
}

bool StarFactorStream::addable(int e) const {
    int u = edges_[e].u, v = edges_[e].v;
    if (state_[u] != VState::Un) std::swap(u, v);
    if (state_[u] != VState::Un) return false;  // both endpoints covered
    switch (state_[v]) {
        case VState::Un:
            return true;
        case VState::K2:
            return bound_ == 0 || bound_ >= 2;
        case VState::Cen:
            return bound_ == 0 || nsat_[v] + 1 <= bound_;
        case VState::Sat:
            return false;
    }
    return false;
}

void StarFactorStream::add(int e) {
    int u = edges_[e].u, v = edges_[e].v;
    if (state_[u] != VState::Un) std::swap(u, v);
    std::vector<Saved> rec;
    auto save = [&](int x) { rec.push_back({x, state_[x], partner_[x], nsat_[x]}); };
    switch (state_[v]) {
        case VState::Un:
            save(u);
            save(v);
            state_[u] = VState::K2;
            partner_[u] = v;
            state_[v] = VState::K2;
            partner_[v] = u;
            uncovered_ -= 2;
            break;
        case VState::K2: {
            int w = partner_[v];
            save(u);
            save(v);
            save(w);
            state_[v] = VState::Cen;
            nsat_[v] = 2;
            state_[w] = VState::Sat;
            partner_[w] = v;
            state_[u] = VState::Sat;
            partner_[u] = v;
            uncovered_ -= 1;
            break;
        }
        case VState::Cen:
            save(u);
            save(v);
            ++nsat_[v];
            state_[u] = VState::Sat;
            partner_[u] = v;
            uncovered_ -= 1;
            break;
        case VState::Sat:
            throw std::logic_error("add on a dead endpoint");
    }
    included_.push_back(e);
    undo_.push_back(std::move(rec));
}

void StarFactorStream::remove_last() {
    for (const Saved& s : undo_.back()) {
        if (state_[s.vertex] != VState::Un && s.state == VState::Un) ++uncovered_;
        state_[s.vertex] = s.state;
        partner_[s.vertex] = s.partner;
        nsat_[s.vertex] = s.nsat;
    }
    undo_.pop_back();
    included_.pop_back();
}

int StarFactorStream::cover_limit() const {
    int limit = std::numeric_limits<int>::max();
    for (int v = 0; v < n_; ++v)
        if (state_[v] == VState::Un) limit = std::min(limit, last_incident_[v]);
    return limit;
}

StarFactor StarFactorStream::make_factor() const {
    std::vector<Edge> es;
    es.reserve(included_.size());
    for (int e : included_) es.push_back(edges_[e]);
    std::vector<int> centers;
    for (int v = 0; v < n_; ++v) {
        if (state_[v] == VState::Cen) centers.push_back(v);
        else if (state_[v] == VState::K2 && v < partner_[v]) centers.push_back(v);
    }
    return StarFactor{EdgeSet(std::move(es)), std::move(centers)};
}

std::optional<StarFactor> StarFactorStream::next() {
    if (!primed_) {
        primed_ = true;
        if (n_ == 0) {
            empty_emitted_ = true;
            return StarFactor{};
        }
        int limit = cover_limit();
        if (limit >= 0) stack_.push_back({0, limit, -1});
    }
    while (!stack_.empty()) {
        Frame& f = stack_.back();
        bool descended = false;
        while (f.j <= f.limit) {
            int e = f.j++;
            if (!addable(e)) continue;
            add(e);
            if (uncovered_ == 0) {
                StarFactor out = make_factor();
                remove_last();
                return out;
            }
            int limit = cover_limit();
            if (limit <= e) {
                remove_last();  // some vertex can no longer be covered
                continue;
            }
            stack_.push_back({e + 1, limit, e});
            descended = true;
            break;
        }
        if (descended) continue;
        int owner = stack_.back().owner;
        stack_.pop_back();
        if (owner >= 0) remove_last();
    }
    return std::nullopt;
}

std::vector<StarFactor> enumerate_star_factors(const Graph& g, std::optional<int> max_star_size) {
    StarFactorStream stream(g, max_star_size);
    std::vector<StarFactor> out;
    while (auto f = stream.next()) out.push_back(std::move(*f));
    return out;
}

bool has_star_factor(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) return false;
    return true;
}

bool has_bounded_star_factor(const Graph& g, int max_star_size) {
    if (max_star_size < 1) throw std::invalid_argument("max_star_size must be >= 1");
    StarFactorStream stream(g, max_star_size);
    return stream.next().has_value();
}

}  // namespace starfactor
