#include "psts/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

namespace psts {

std::vector<long> triangles_through(const IncidenceStructure& s) {
  std::vector<long> out(s.v(), 0);
  for (const Triangle& t : triangles(s))
    for (Point p : t.pts) ++out[p];
  return out;
}

std::vector<std::array<Point, 6>> veblen_point_sets(const IncidenceStructure& s) {
  std::set<std::array<Point, 6>> hits;
  for (Point x = 0; x < s.v(); ++x) {
    const auto& ls = s.lines_of(x);
    for (size_t i = 0; i < ls.size(); ++i)
      for (size_t j = i + 1; j < ls.size(); ++j) {
        std::array<Point, 2> u{}, w{};
        int ui = 0, wi = 0;
        for (Point p : s.line(ls[i]))
          if (p != x) u[ui++] = p;
        for (Point p : s.line(ls[j]))
          if (p != x) w[wi++] = p;
        for (int swap = 0; swap < 2; ++swap) {
          Point c = swap ? w[1] : w[0];
          Point d = swap ? w[0] : w[1];
          Point q1 = s.third(u[0], c);
          if (q1 == kUndefined) continue;
          Point q2 = s.third(u[1], d);
          if (q1 != q2) continue;
          std::array<Point, 6> v = {x, u[0], u[1], c, d, q1};
          std::sort(v.begin(), v.end());
          hits.insert(v);
        }
      }
  }
  return {hits.begin(), hits.end()};
}

std::vector<long> veblens_through(const IncidenceStructure& s) {
  std::vector<long> out(s.v(), 0);
  for (const auto& v : veblen_point_sets(s))
    for (Point p : v) ++out[p];
  return out;
}

namespace {

using Sig = std::vector<long>;

std::vector<int> assign_ids(const std::vector<Sig>& sigs) {
  std::map<Sig, int> ids;
  for (const Sig& s : sigs) ids.emplace(s, 0);
  int next = 0;
  for (auto& [sig, id] : ids) id = next++;
  std::vector<int> out(sigs.size());
  for (size_t i = 0; i < sigs.size(); ++i) out[i] = ids.at(sigs[i]);
  return out;
}

std::vector<int> refine(const IncidenceStructure& s, const IncidenceStructure* t) {
  // Operates on the disjoint union of s and (optionally) t.
  std::vector<const IncidenceStructure*> parts{&s};
  if (t) parts.push_back(t);
  std::vector<Sig> sigs;
  for (const auto* part : parts) {
    auto tri = triangles_through(*part);
    auto veb = veblens_through(*part);
    for (Point p = 0; p < part->v(); ++p)
      sigs.push_back({part->degree(p), tri[p], veb[p]});
  }
  std::vector<int> colors = assign_ids(sigs);
  size_t classes = std::set<int>(colors.begin(), colors.end()).size();
  for (int round = 0; round < 32; ++round) {
    std::vector<Sig> next;
    size_t off = 0;
    for (const auto* part : parts) {
      for (Point p = 0; p < part->v(); ++p) {
        Sig sig{colors[off + p]};
        std::vector<std::pair<long, long>> nb;
        for (int li : part->lines_of(p)) {
          long c1 = -1, c2 = -1;
          for (Point q : part->line(li))
            if (q != p) {
              if (c1 == -1)
                c1 = colors[off + q];
              else
                c2 = colors[off + q];
            }
          nb.emplace_back(std::min(c1, c2), std::max(c1, c2));
        }
        std::sort(nb.begin(), nb.end());
        for (auto [a, b] : nb) {
          sig.push_back(a);
          sig.push_back(b);
        }
        next.push_back(std::move(sig));
      }
      off += part->v();
    }
    std::vector<int> refined = assign_ids(next);
    size_t nclasses = std::set<int>(refined.begin(), refined.end()).size();
    colors = std::move(refined);
    if (nclasses == classes) break;
    classes = nclasses;
  }
  return colors;
}

struct Plan {
  std::vector<int> order;  // step -> pattern point
  struct Step {
    Point point;
    std::vector<std::pair<int, int>> forced;  // earlier (e1,e2) completing a pattern line
    std::vector<int> adj_earlier;
    std::vector<int> nonadj_earlier;
  };
  std::vector<Step> steps;
};

Plan make_plan(const IncidenceStructure& pat, bool iso_mode) {
  const int n = pat.v();
  Plan plan;
  std::vector<char> placed(n, 0);
  for (int t = 0; t < n; ++t) {
    int best = -1, best_adj = -1, best_deg = -1;
    for (Point u = 0; u < n; ++u) {
      if (placed[u]) continue;
      int adj = 0;
      for (Point e : pat.neighbors(u))
        if (placed[e]) ++adj;
      if (adj > best_adj || (adj == best_adj && pat.degree(u) > best_deg)) {
        best = u;
        best_adj = adj;
        best_deg = pat.degree(u);
      }
    }
    placed[best] = 1;
    plan.order.push_back(best);
  }
  std::vector<int> pos(n);
  for (int t = 0; t < n; ++t) pos[plan.order[t]] = t;
  for (int t = 0; t < n; ++t) {
    Plan::Step st;
    st.point = plan.order[t];
    for (int li : pat.lines_of(st.point)) {
      std::array<Point, 2> others{};
      int k = 0;
      for (Point q : pat.line(li))
        if (q != st.point) others[k++] = q;
      if (pos[others[0]] < t && pos[others[1]] < t) st.forced.push_back({others[0], others[1]});
    }
    for (Point e : pat.neighbors(st.point))
      if (pos[e] < t) st.adj_earlier.push_back(e);
    if (iso_mode)
      for (Point e = 0; e < n; ++e)
        if (e != st.point && pos[e] < t && !pat.collinear(st.point, e))
          st.nonadj_earlier.push_back(e);
    plan.steps.push_back(std::move(st));
  }
  return plan;
}

struct Searcher {
  const IncidenceStructure& pat;
  const IncidenceStructure& host;
  const Plan& plan;
  const SearchOptions& opts;
  const std::vector<int>* pat_colors;   // nullable (embedding mode)
  const std::vector<int>* host_colors;  // nullable
  std::vector<PointMap> results;
  PointMap map;
  std::vector<char> used;
  long remaining;

  Searcher(const IncidenceStructure& p, const IncidenceStructure& h, const Plan& pl,
           const SearchOptions& o, const std::vector<int>* pc, const std::vector<int>* hc)
      : pat(p), host(h), plan(pl), opts(o), pat_colors(pc), host_colors(hc) {
    map.assign(pat.v(), kUndefined);
    used.assign(host.v(), 0);
    remaining = o.limit < 0 ? -1 : o.limit;
  }

  bool feasible(const Plan::Step& st, Point h) const {
    if (used[h]) return false;
    if (opts.iso_mode) {
      if ((*host_colors)[h] != (*pat_colors)[st.point]) return false;
    } else if (host.degree(h) < pat.degree(st.point)) {
      return false;
    }
    for (auto [e1, e2] : st.forced)
      if (host.third(map[e1], map[e2]) != h) return false;
    for (Point e : st.adj_earlier)
      if (!host.collinear(map[e], h)) return false;
    for (Point e : st.nonadj_earlier)
      if (host.collinear(map[e], h)) return false;
    return true;
  }

  // Returns false when the result limit is hit.
  bool recurse(size_t t) {
    if (t == plan.steps.size()) {
      results.push_back(map);
      if (remaining > 0 && --remaining == 0) return false;
      return true;
    }
    const Plan::Step& st = plan.steps[t];
    if (!st.forced.empty()) {
      Point h = host.third(map[st.forced[0].first], map[st.forced[0].second]);
      if (h == kUndefined || !feasible(st, h)) return true;
      return place(st, h, t);
    }
    if (!st.adj_earlier.empty()) {
      for (Point h : host.neighbors(map[st.adj_earlier[0]])) {
        if (!feasible(st, h)) continue;
        if (!place(st, h, t)) return false;
      }
      return true;
    }
    for (Point h = 0; h < host.v(); ++h) {
      if (!feasible(st, h)) continue;
      if (!place(st, h, t)) return false;
    }
    return true;
  }

  bool place(const Plan::Step& st, Point h, size_t t) {
    map[st.point] = h;
    used[h] = 1;
    bool cont = recurse(t + 1);
    used[h] = 0;
    map[st.point] = kUndefined;
    return cont;
  }

  // Root candidates for step 0 (for the parallel split).
  std::vector<Point> root_candidates() const {
    std::vector<Point> out;
    for (Point h = 0; h < host.v(); ++h)
      if (feasible(plan.steps[0], h)) out.push_back(h);
    return out;
  }

  bool run_root(Point h) {
    const Plan::Step& st = plan.steps[0];
    return place(st, h, 0);
  }
};

}  // namespace

std::pair<std::vector<int>, std::vector<int>> joint_colors(const IncidenceStructure& a,
                                                           const IncidenceStructure& b) {
  auto colors = refine(a, &b);
  std::vector<int> ca(colors.begin(), colors.begin() + a.v());
  std::vector<int> cb(colors.begin() + a.v(), colors.end());
  return {std::move(ca), std::move(cb)};
}

std::vector<PointMap> enumerate_monomorphisms(const IncidenceStructure& pattern,
                                              const IncidenceStructure& host,
                                              const SearchOptions& opts) {
  if (pattern.v() == 0) return {PointMap{}};
  if (pattern.v() > host.v() || pattern.b() > host.b()) return {};
  std::vector<int> pc, hc;
  if (opts.iso_mode) {
    if (pattern.v() != host.v() || pattern.b() != host.b()) return {};
    std::tie(pc, hc) = joint_colors(pattern, host);
    auto sp = pc, sh = hc;
    std::sort(sp.begin(), sp.end());
    std::sort(sh.begin(), sh.end());
    if (sp != sh) return {};
  }
  Plan plan = make_plan(pattern, opts.iso_mode);
  Searcher root(pattern, host, plan, opts, opts.iso_mode ? &pc : nullptr,
                opts.iso_mode ? &hc : nullptr);
  auto roots = root.root_candidates();
  int workers = std::max(1, opts.workers);
  if (workers == 1 || opts.limit >= 0 || roots.size() <= 1) {
    for (Point h : roots)
      if (!root.run_root(h)) break;
    return std::move(root.results);
  }
  // Parallel over root candidates; results concatenated in root order so the
  // output is identical to the sequential run.
  workers = std::min<int>(workers, static_cast<int>(roots.size()));
  std::vector<std::vector<PointMap>> chunks(roots.size());
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= roots.size()) return;
        Searcher s(pattern, host, plan, opts, opts.iso_mode ? &pc : nullptr,
                   opts.iso_mode ? &hc : nullptr);
        s.run_root(roots[i]);
        chunks[i] = std::move(s.results);
      }
    });
  for (auto& th : pool) th.join();
  std::vector<PointMap> out;
  for (auto& c : chunks)
    for (auto& m : c) out.push_back(std::move(m));
  return out;
}

}  // namespace psts
