#include "nodal/enriques.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <mutex>
#include <set>
#include <stdexcept>

namespace nodal {

EnriquesDiagram::EnriquesDiagram(std::vector<DiagramVertex> vertices)
    : vertices_(std::move(vertices)) {
    std::set<std::string> ids;
    for (const auto& v : vertices_)
        if (!ids.insert(v.id).second)
            throw std::invalid_argument("EnriquesDiagram: duplicate vertex id '" + v.id + "'");
}

int EnriquesDiagram::index_of(const std::string& id) const {
    for (size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].id == id) return static_cast<int>(i);
    return -1;
}

EnriquesDiagram EnriquesDiagram::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<DiagramVertex> vs;
    for (const auto& jv : j.at("vertices")) {
        DiagramVertex v;
        v.id = jv.at("id").get<std::string>();
        v.mult = jv.at("mult").get<int>();
        if (jv.contains("parent") && !jv.at("parent").is_null())
            v.parent = jv.at("parent").get<std::string>();
        if (jv.contains("proximities"))
            for (const auto& p : jv.at("proximities")) v.proximities.push_back(p.get<std::string>());
        vs.push_back(std::move(v));
    }
    return EnriquesDiagram(std::move(vs));
}

std::string EnriquesDiagram::to_json_text() const {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : vertices_) {
        nlohmann::ordered_json jv;
        jv["id"] = v.id;
        jv["mult"] = v.mult;
        if (v.parent) jv["parent"] = *v.parent; else jv["parent"] = nullptr;
        jv["proximities"] = v.proximities;
        j["vertices"].push_back(jv);
    }
    return j.dump();
}

EnriquesDiagram EnriquesDiagram::builtin(const std::string& name) {
    auto chain = [](std::vector<int> mults,
                    std::vector<std::pair<int, int>> extra_prox) {
        std::vector<DiagramVertex> vs;
        for (size_t i = 0; i < mults.size(); ++i) {
            DiagramVertex v;
            v.id = "p" + std::to_string(i);
            v.mult = mults[i];
            if (i > 0) {
                v.parent = "p" + std::to_string(i - 1);
                v.proximities.push_back(*v.parent);
            }
            vs.push_back(std::move(v));
        }
        for (auto [from, to] : extra_prox)
            vs[from].proximities.push_back("p" + std::to_string(to));
        return EnriquesDiagram(std::move(vs));
    };
    // A2 (ordinary cusp): 2 -> 1 -> 1 with the last point satellite to the
    // root. A3 (tacnode): double point with a free infinitely near double
    // point. D6: triple point with an infinitely near double point. E7:
    // triple point with an infinitely near tacnode, resolved as 3 -> 2 -> 1
    // with the last point satellite.
    if (name == "A1") return chain({2}, {});
    if (name == "A2") return chain({2, 1, 1}, {{2, 0}});
    if (name == "A3") return chain({2, 2}, {});
    if (name == "D4") return chain({3}, {});
    if (name == "D6") return chain({3, 2}, {});
    if (name == "E7") return chain({3, 2, 1}, {{2, 0}});
    if (name == "X1,0" || name == "X1_0" || name == "X10") return chain({4}, {});
    throw std::invalid_argument("no built-in diagram named '" + name + "'");
}

std::vector<std::string> EnriquesDiagram::builtin_names() {
    return {"A1", "A2", "A3", "D4", "D6", "E7", "X1,0"};
}

namespace enriques {

namespace {

struct Resolved {
    std::vector<int> parent;                 // -1 on roots
    std::vector<std::vector<int>> prox;      // proximity targets, indices
    std::vector<std::vector<int>> prox_of;   // vertices proximate to i
    std::vector<int> depth;
};

Resolved resolve(const EnriquesDiagram& d, std::vector<std::string>* errors) {
    const auto& vs = d.vertices();
    Resolved r;
    r.parent.assign(vs.size(), -1);
    r.prox.resize(vs.size());
    r.prox_of.resize(vs.size());
    r.depth.assign(vs.size(), -1);
    for (size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].parent) {
            int p = d.index_of(*vs[i].parent);
            if (p < 0) {
                if (errors) errors->push_back(vs[i].id + ": unknown parent '" + *vs[i].parent + "'");
                continue;
            }
            r.parent[i] = p;
        }
        std::set<int> seen;
        for (const auto& t : vs[i].proximities) {
            int p = d.index_of(t);
            if (p < 0) {
                if (errors) errors->push_back(vs[i].id + ": unknown proximity target '" + t + "'");
                continue;
            }
            if (seen.insert(p).second) r.prox[i].push_back(p);
        }
    }
    // Depths; also detects parent cycles.
    for (size_t i = 0; i < vs.size(); ++i) {
        int steps = 0;
        int cur = static_cast<int>(i);
        while (cur >= 0 && steps <= static_cast<int>(vs.size())) {
            cur = r.parent[cur];
            ++steps;
        }
        if (cur >= 0) {
            if (errors) errors->push_back(vs[i].id + ": parent chain contains a cycle");
        } else {
            r.depth[i] = steps - 1;
        }
    }
    for (size_t i = 0; i < vs.size(); ++i)
        for (int t : r.prox[i])
            if (t >= 0) r.prox_of[t].push_back(static_cast<int>(i));
    return r;
}

bool is_ancestor(const Resolved& r, int anc, int v) {
    for (int cur = r.parent[v]; cur >= 0; cur = r.parent[cur])
        if (cur == anc) return true;
    return false;
}

}  // namespace

std::vector<std::string> validate(const EnriquesDiagram& d) {
    std::vector<std::string> errors;
    const auto& vs = d.vertices();
    Resolved r = resolve(d, &errors);
    if (!errors.empty()) return errors;  // structure too broken for the rest

    for (size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].mult < 1) errors.push_back(vs[i].id + ": multiplicity must be >= 1");
        bool parent_in_prox = false;
        for (int t : r.prox[i]) {
            if (t == r.parent[i]) parent_in_prox = true;
            if (!is_ancestor(r, t, static_cast<int>(i)))
                errors.push_back(vs[i].id + ": proximate to '" + vs[t].id +
                                 "', which does not strictly precede it");
        }
        if (r.parent[i] >= 0 && !parent_in_prox)
            errors.push_back(vs[i].id + ": not proximate to its parent");
        if (r.parent[i] < 0 && !r.prox[i].empty())
            errors.push_back(vs[i].id + ": a root cannot be proximate to anything");
        if (r.prox[i].size() > 2)
            errors.push_back(vs[i].id + ": exceeds two proximities");
        // A point proximate to a non-parent lies on the chain of the
        // corresponding exceptional divisor, so its parent does too.
        for (int t : r.prox[i]) {
            if (t == r.parent[i]) continue;
            int p = r.parent[i];
            if (p >= 0 && std::find(r.prox[p].begin(), r.prox[p].end(), t) == r.prox[p].end())
                errors.push_back(vs[i].id + ": proximate to '" + vs[t].id +
                                 "' but its parent '" + vs[p].id + "' is not");
        }
    }
    // Proximity inequality from the proximity equalities restricted to Sing.
    for (size_t i = 0; i < vs.size(); ++i) {
        long sum = 0;
        for (int q : r.prox_of[i]) sum += vs[q].mult;
        if (vs[i].mult < sum)
            errors.push_back(vs[i].id + ": proximity inequality fails (mult " +
                             std::to_string(vs[i].mult) + " < " + std::to_string(sum) +
                             " over proximate points)");
    }
    // Membership in the cluster of singular points: a simple point is
    // singular only when it is a satellite or precedes one.
    for (size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].mult > 1 || r.prox[i].size() == 2) continue;
        bool precedes_satellite = false;
        for (size_t q = 0; q < vs.size(); ++q)
            if (r.prox[q].size() == 2 && is_ancestor(r, static_cast<int>(i), static_cast<int>(q)))
                precedes_satellite = true;
        if (!precedes_satellite)
            errors.push_back(vs[i].id + ": simple point is neither a satellite nor precedes one, "
                                        "so it is not a singular point");
    }
    return errors;
}

EquisingularityInvariants invariants(const EnriquesDiagram& d) {
    auto errors = validate(d);
    if (!errors.empty())
        throw std::invalid_argument("invariants: invalid diagram: " + errors.front());
    Resolved r = resolve(d, nullptr);
    const auto& vs = d.vertices();
    EquisingularityInvariants inv;
    for (size_t i = 0; i < vs.size(); ++i) {
        long m = vs[i].mult;
        inv.delta += m * (m - 1) / 2;
        inv.deg += m * (m + 1) / 2;
        long prox_sum = 0;
        for (int q : r.prox_of[i]) prox_sum += vs[q].mult;
        inv.r += m - prox_sum;
        if (r.parent[i] < 0) ++inv.roots;
        else if (r.prox[i].size() == 1) ++inv.free_pts;
    }
    inv.dim = 2 * inv.roots + inv.free_pts;
    inv.expcod = inv.deg - inv.dim;
    inv.mu = 2 * inv.delta - inv.r + inv.roots;
    return inv;
}

long long sequence_count(const std::map<std::string, int>& types) {
    for (const auto& [name, count] : types) {
        if (name != "A1" && name != "D4" && name != "D6" && name != "E7")
            throw std::invalid_argument("sequence_count: unsupported type '" + name + "'");
        if (count < 0) throw std::invalid_argument("sequence_count: negative multiplicity");
    }
    // State: counts of (A1, D4, D6, E7).
    using State = std::array<int, 4>;
    static std::mutex mu;
    static std::map<State, long long> memo;

    auto get = [&](const std::map<std::string, int>& t, const char* k) {
        auto it = t.find(k);
        return it == t.end() ? 0 : it->second;
    };
    State start = {get(types, "A1"), get(types, "D4"), get(types, "D6"), get(types, "E7")};

    std::scoped_lock lock(mu);
    auto rec = [&](auto&& self, const State& s) -> long long {
        if (s == State{0, 0, 0, 0}) return 1;
        auto it = memo.find(s);
        if (it != memo.end()) return it->second;
        long long total = 0;
        if (s[0] > 0) {  // consume a node
            State t = s; --t[0];
            total += static_cast<long long>(s[0]) * self(self, t);
        }
        if (s[1] > 0) {  // triple point -> three nodes after the blow-up
            State t = s; --t[1]; t[0] += 3;
            total += static_cast<long long>(s[1]) * self(self, t);
        }
        if (s[2] > 0) {  // D6 -> D4 + A1
            State t = s; --t[2]; ++t[1]; ++t[0];
            total += static_cast<long long>(s[2]) * self(self, t);
        }
        if (s[3] > 0) {  // E7 -> D6
            State t = s; --t[3]; ++t[2];
            total += static_cast<long long>(s[3]) * self(self, t);
        }
        memo.emplace(s, total);
        return total;
    };
    return rec(rec, start);
}

namespace {

std::string vertex_signature(const EnriquesDiagram& d, const Resolved& r, int i) {
    const auto& vs = d.vertices();
    std::string sig = "(" + std::to_string(vs[i].mult);
    // A satellite's second proximity target is an ancestor; its relative
    // depth is a relabeling-invariant tag.
    for (int t : r.prox[i])
        if (t != r.parent[i]) sig += ",s" + std::to_string(r.depth[i] - r.depth[t]);
    std::vector<std::string> kids;
    for (size_t q = 0; q < vs.size(); ++q)
        if (r.parent[q] == i) kids.push_back(vertex_signature(d, r, static_cast<int>(q)));
    std::sort(kids.begin(), kids.end());
    for (const auto& k : kids) sig += k;
    return sig + ")";
}

}  // namespace

std::string canonical_form(const EnriquesDiagram& d) {
    Resolved r = resolve(d, nullptr);
    std::vector<std::string> roots;
    for (size_t i = 0; i < d.vertices().size(); ++i)
        if (r.parent[i] < 0) roots.push_back(vertex_signature(d, r, static_cast<int>(i)));
    std::sort(roots.begin(), roots.end());
    std::string out;
    for (const auto& s : roots) out += s;
    return out;
}

bool iso(const EnriquesDiagram& a, const EnriquesDiagram& b) {
    return canonical_form(a) == canonical_form(b);
}

namespace {

// Growth state for the bounded search: vertices in insertion order, root
// first; each records multiplicity, parent index and an optional second
// proximity target (making it a satellite).
struct GrowVertex {
    int mult;
    int parent;  // -1 for the root
    int sat;     // second proximity target, or -1
};

EnriquesDiagram materialize(const std::vector<GrowVertex>& g) {
    std::vector<DiagramVertex> vs(g.size());
    for (size_t i = 0; i < g.size(); ++i) {
        vs[i].id = "p" + std::to_string(i);
        vs[i].mult = g[i].mult;
        if (g[i].parent >= 0) {
            vs[i].parent = "p" + std::to_string(g[i].parent);
            vs[i].proximities.push_back(*vs[i].parent);
        }
        if (g[i].sat >= 0) vs[i].proximities.push_back("p" + std::to_string(g[i].sat));
    }
    return EnriquesDiagram(std::move(vs));
}

long partial_expcod(const std::vector<GrowVertex>& g) {
    long deg = 0, dim = 2, free_pts = 0;
    for (const auto& v : g) {
        deg += static_cast<long>(v.mult) * (v.mult + 1) / 2;
        if (v.parent >= 0 && v.sat < 0) ++free_pts;
    }
    return deg - dim - free_pts;
}

long slack(const std::vector<GrowVertex>& g, int i) {
    long s = g[i].mult;
    for (const auto& v : g) {
        if (v.parent == i) s -= v.mult;
        if (v.sat == i) s -= v.mult;
    }
    return s;
}

}  // namespace

std::vector<EnriquesDiagram> enumerate_classes(int max_expcod, int max_roots) {
    if (max_expcod > 8)
        throw std::invalid_argument("enumerate_classes: max_expcod > 8 exceeds the resource guard");
    if (max_roots < 1) throw std::invalid_argument("enumerate_classes: max_roots must be >= 1");

    // Single-root classes by breadth-first closure over canonical forms.
    // Adding any vertex never lowers deg - dim, so partial diagrams beyond
    // the bound are cut. A simple free point is admitted only when its
    // parent retains proximity slack for the satellite that must later make
    // it singular (the closing satellite is necessarily a child anchored at
    // that parent).
    std::vector<EnriquesDiagram> singles;
    if (max_expcod >= 1) {
        std::set<std::string> seen;
        std::vector<std::vector<GrowVertex>> work;
        for (int m = 2; static_cast<long>(m) * (m + 1) / 2 - 2 <= max_expcod; ++m) {
            std::vector<GrowVertex> seed = {{m, -1, -1}};
            seen.insert(canonical_form(materialize(seed)));
            work.push_back(std::move(seed));
        }
        for (size_t w = 0; w < work.size(); ++w) {
            std::vector<GrowVertex> g = work[w];
            const int n = static_cast<int>(g.size());
            for (int parent = 0; parent < n; ++parent) {
                long ps = slack(g, parent);
                for (int m = 1; m <= ps; ++m) {
                    // Satellite targets must be proximity targets of the
                    // parent (the exceptional-divisor chain condition).
                    std::vector<int> sats = {-1};
                    if (g[parent].parent >= 0 && slack(g, g[parent].parent) >= m)
                        sats.push_back(g[parent].parent);
                    if (g[parent].sat >= 0 && slack(g, g[parent].sat) >= m)
                        sats.push_back(g[parent].sat);
                    for (int sat : sats) {
                        if (m == 1 && sat < 0 && ps - m < 1) continue;  // unclosable simple point
                        std::vector<GrowVertex> next = g;
                        next.push_back({m, parent, sat});
                        if (partial_expcod(next) > max_expcod) continue;
                        std::string key = canonical_form(materialize(next));
                        if (seen.insert(key).second) work.push_back(std::move(next));
                    }
                }
            }
        }
        std::set<std::string> emitted;
        for (const auto& g : work) {
            EnriquesDiagram d = materialize(g);
            if (!validate(d).empty()) continue;
            if (invariants(d).expcod > max_expcod) continue;
            if (emitted.insert(canonical_form(d)).second) singles.push_back(d);
        }
        std::sort(singles.begin(), singles.end(), [](const auto& a, const auto& b) {
            auto ia = invariants(a), ib = invariants(b);
            if (ia.expcod != ib.expcod) return ia.expcod < ib.expcod;
            return canonical_form(a) < canonical_form(b);
        });
    }
    if (max_roots == 1) return singles;

    // Multi-root classes are disjoint unions of single-root ones; the
    // invariants are additive, so combine within the budget.
    std::vector<EnriquesDiagram> out;
    std::vector<size_t> pick;
    auto expcod_of = [&](size_t i) { return invariants(singles[i]).expcod; };
    auto emit = [&]() {
        std::vector<DiagramVertex> verts;
        int offset = 0;
        for (size_t idx : pick) {
            for (auto v : singles[idx].vertices()) {
                auto rename = [&](const std::string& id) {
                    return "c" + std::to_string(offset) + "_" + id;
                };
                v.id = rename(v.id);
                if (v.parent) v.parent = rename(*v.parent);
                for (auto& p : v.proximities) p = rename(p);
                verts.push_back(std::move(v));
            }
            ++offset;
        }
        out.emplace_back(std::move(verts));
    };
    auto rec = [&](auto&& self, size_t from, long budget, int roots_left) -> void {
        if (!pick.empty()) emit();
        if (roots_left == 0) return;
        for (size_t i = from; i < singles.size(); ++i)
            if (expcod_of(i) <= budget) {
                pick.push_back(i);
                self(self, i, budget - expcod_of(i), roots_left - 1);
                pick.pop_back();
            }
    };
    rec(rec, 0, max_expcod, max_roots);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        auto ia = invariants(a), ib = invariants(b);
        if (ia.expcod != ib.expcod) return ia.expcod < ib.expcod;
        return canonical_form(a) < canonical_form(b);
    });
    return out;
}

}  // namespace enriques
}  // namespace nodal
