#include "starfactor/classifier.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "starfactor/canonical.hpp"
#include "starfactor/graph6.hpp"
#include "starfactor/uniformity.hpp"

namespace starfactor {
namespace {

Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph(n, edges);
}

bool iso_member(const Graph& g, const std::vector<Graph>& slice) {
    return std::any_of(slice.begin(), slice.end(),
                       [&](const Graph& m) { return are_isomorphic(g, m); });
}

std::string trimmed(const std::string& line) {
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = line.find_last_not_of(" \t\r\n");
    return line.substr(first, last - first + 1);
}

struct Unit {
    Graph graph;
    std::vector<int> to_parent;  // local vertex -> vertex of the input graph
};

std::vector<Unit> split_units(const Graph& g) {
    std::vector<Unit> units;
    for (const auto& verts : components(g)) {
        Unit u;
        u.to_parent = verts;
        Graph sub(static_cast<int>(verts.size()));
        for (std::size_t i = 0; i < verts.size(); ++i) {
            for (std::size_t j = i + 1; j < verts.size(); ++j) {
                if (g.has_edge(verts[i], verts[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        }
        u.graph = std::move(sub);
        units.push_back(std::move(u));
    }
    return units;
}

StarFactor remap_factor(const StarFactor& f, const std::vector<int>& to_parent) {
    std::vector<Edge> edges;
    for (const Edge& e : f.edges) edges.push_back({to_parent[e.u], to_parent[e.v]});
    StarFactor out;
    out.edges = EdgeSet(edges);
    for (int c : f.centers) out.centers.push_back(to_parent[c]);
    std::sort(out.centers.begin(), out.centers.end());
    return out;
}

struct UnitOutcome {
    MembershipStatus status;
    Method method;
    bool inside;
    std::optional<std::pair<StarFactor, StarFactor>> witness;  // local labels
};

UnitOutcome classify_unit(const Graph& u, const Catalog& catalog) {
    const int md = min_degree(u);
    const Girth gi = girth(u);
    const bool inside = md >= 2 && (gi.equals(3) || gi.at_least(5));
    if (md >= 2 && gi.at_least(5)) {
        const bool member = iso_member(u, catalog.girth5plus);
        return {member ? MembershipStatus::InU : MembershipStatus::NotInU, Method::Theorem1, inside,
                std::nullopt};
    }
    if (md >= 2 && gi.equals(3) && !catalog.girth3.empty()) {
        const bool member = iso_member(u, catalog.girth3);
        return {member ? MembershipStatus::InU : MembershipStatus::NotInU, Method::Theorem2Catalog,
                inside, std::nullopt};
    }
    UniformityReport report = is_uniform(u);
    if (!report.factor_exists) {
        return {MembershipStatus::NoFactor, Method::BruteForce, inside, std::nullopt};
    }
    return {report.uniform ? MembershipStatus::InU : MembershipStatus::NotInU, Method::BruteForce,
            inside, std::move(report.witness)};
}

StarFactor first_factor(const Graph& g) {
    StarFactorStream stream(g);
    auto f = stream.next();
    if (!f) throw std::logic_error("first_factor: graph has no star-factor");
    return std::move(*f);
}

}  // namespace

Catalog::Catalog() : girth5plus{cycle_graph(5), cycle_graph(7)} {}

Catalog Catalog::with_girth3(std::vector<Graph> members) {
    Catalog c;
    c.girth3 = std::move(members);
    return c;
}

Catalog load_catalog(std::istream& in) {
    std::vector<Graph> members;
    std::string line;
    while (std::getline(in, line)) {
        const std::string body = trimmed(line);
        if (body.empty() || body[0] == '#') continue;
        members.push_back(parse_graph6(body));
    }
    return Catalog::with_girth3(std::move(members));
}

void save_catalog(std::ostream& out, const Catalog& catalog) {
    out << "# uniform star-factor catalog: girth-3 slice\n";
    out << "# members: " << catalog.girth3.size() << "\n";
    for (const Graph& g : catalog.girth3) out << to_graph6(g) << "\n";
}

CatalogVerification verify_catalog(const Catalog& catalog) {
    CatalogVerification v;
    auto complain = [&](const std::string& msg) {
        v.ok = false;
        v.issues.push_back(msg);
    };

    auto check_slice = [&](const std::vector<Graph>& slice, const std::string& name, bool girth3) {
        for (std::size_t i = 0; i < slice.size(); ++i) {
            const Graph& g = slice[i];
            const std::string tag = name + "[" + std::to_string(i) + "] (" + to_graph6(g) + ")";
            if (g.vertex_count() == 0) {
                complain(tag + ": empty graph");
                continue;
            }
            if (!is_connected(g)) complain(tag + ": not connected");
            if (min_degree(g) < 2) complain(tag + ": minimum degree below 2");
            const Girth gi = girth(g);
            if (girth3 && !gi.equals(3)) complain(tag + ": girth is not 3");
            if (!girth3 && !gi.at_least(5)) complain(tag + ": girth below 5");
            UniformityReport report = is_uniform(g);
            if (!report.factor_exists) {
                complain(tag + ": has no star-factor");
            } else if (!report.uniform) {
                complain(tag + ": star-factor weights are not all equal");
            }
            for (std::size_t j = i + 1; j < slice.size(); ++j) {
                if (are_isomorphic(g, slice[j])) {
                    complain(tag + ": isomorphic to " + name + "[" + std::to_string(j) + "]");
                }
            }
        }
    };

    check_slice(catalog.girth3, "girth3", true);
    check_slice(catalog.girth5plus, "girth5plus", false);

    if (!catalog.girth3.empty() && !iso_member(cycle_graph(3), catalog.girth3)) {
        complain("girth3: missing the triangle");
    }
    if (!iso_member(cycle_graph(5), catalog.girth5plus)) {
        complain("girth5plus: missing the 5-cycle");
    }
    if (!iso_member(cycle_graph(7), catalog.girth5plus)) {
        complain("girth5plus: missing the 7-cycle");
    }
    return v;
}

Classification classify(const Graph& g, const Catalog& catalog) {
    Classification result;
    if (g.vertex_count() == 0) {
        // One empty star-factor, vacuously uniform; no components, so the
        // scope condition holds vacuously as well.
        result.status = MembershipStatus::InU;
        result.method = Method::BruteForce;
        result.scope = Scope::InsideCharacterization;
        return result;
    }

    std::vector<Unit> units = split_units(g);
    std::vector<UnitOutcome> outcomes;
    outcomes.reserve(units.size());
    bool all_inside = true;
    bool any_no_factor = false;
    bool any_not_in = false;
    for (const Unit& u : units) {
        if (u.graph.vertex_count() == 1) {
            // An isolated vertex can never be covered by a star.
            outcomes.push_back({MembershipStatus::NoFactor, Method::BruteForce, false, std::nullopt});
        } else {
            outcomes.push_back(classify_unit(u.graph, catalog));
        }
        all_inside = all_inside && outcomes.back().inside;
        any_no_factor = any_no_factor || outcomes.back().status == MembershipStatus::NoFactor;
        any_not_in = any_not_in || outcomes.back().status == MembershipStatus::NotInU;
    }
    result.scope = all_inside ? Scope::InsideCharacterization : Scope::OutsideCharacterization;

    if (units.size() == 1) {
        result.status = outcomes[0].status;
        result.method = outcomes[0].method;
        if (outcomes[0].witness) {
            result.witness = std::make_pair(remap_factor(outcomes[0].witness->first, units[0].to_parent),
                                            remap_factor(outcomes[0].witness->second, units[0].to_parent));
        }
        return result;
    }

    // Disconnected: the characterizations say nothing about the whole graph,
    // so the method is always reported as enumeration.
    result.method = Method::BruteForce;
    if (any_no_factor) {
        result.status = MembershipStatus::NoFactor;
        return result;
    }
    if (!any_not_in) {
        result.status = MembershipStatus::InU;
        return result;
    }
    result.status = MembershipStatus::NotInU;

    // Build a whole-graph witness: two factors of some non-uniform component
    // (enumerated on demand when a theorem made the call), padded with a
    // fixed factor of every other component.
    for (std::size_t bad = 0; bad < units.size(); ++bad) {
        if (outcomes[bad].status != MembershipStatus::NotInU) continue;
        std::optional<std::pair<StarFactor, StarFactor>> local = outcomes[bad].witness;
        if (!local) {
            UniformityReport report = is_uniform(units[bad].graph);
            local = std::move(report.witness);
        }
        if (!local) continue;  // defensive: catalog claimed non-member, enumeration disagreed
        StarFactor a = remap_factor(local->first, units[bad].to_parent);
        StarFactor b = remap_factor(local->second, units[bad].to_parent);
        for (std::size_t i = 0; i < units.size(); ++i) {
            if (i == bad) continue;
            StarFactor pad = remap_factor(first_factor(units[i].graph), units[i].to_parent);
            std::vector<Edge> ea(a.edges.begin(), a.edges.end());
            ea.insert(ea.end(), pad.edges.begin(), pad.edges.end());
            a.edges = EdgeSet(ea);
            std::vector<Edge> eb(b.edges.begin(), b.edges.end());
            eb.insert(eb.end(), pad.edges.begin(), pad.edges.end());
            b.edges = EdgeSet(eb);
            a.centers.insert(a.centers.end(), pad.centers.begin(), pad.centers.end());
            b.centers.insert(b.centers.end(), pad.centers.begin(), pad.centers.end());
        }
        std::sort(a.centers.begin(), a.centers.end());
        std::sort(b.centers.begin(), b.centers.end());
        result.witness = std::make_pair(std::move(a), std::move(b));
        break;
    }
    return result;
}

Classification classify(const Graph& g) {
    return classify(g, Catalog());
}

std::string to_string(MembershipStatus status) {
    switch (status) {
        case MembershipStatus::InU: return "in_U";
        case MembershipStatus::NotInU: return "not_in_U";
        case MembershipStatus::NoFactor: return "no_factor";
    }
    throw std::logic_error("to_string: bad MembershipStatus");
}

std::string to_string(Method method) {
    switch (method) {
        case Method::Theorem1: return "theorem1";
        case Method::Theorem2Catalog: return "theorem2_catalog";
        case Method::BruteForce: return "brute_force";
    }
    throw std::logic_error("to_string: bad Method");
}

std::string to_string(Scope scope) {
    switch (scope) {
        case Scope::InsideCharacterization: return "inside_characterization";
        case Scope::OutsideCharacterization: return "outside_characterization";
    }
    throw std::logic_error("to_string: bad Scope");
}

}  // namespace starfactor
