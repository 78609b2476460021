#include "asdim/graph_of_groups.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "asdim/error.hpp"

namespace asdim {

namespace {

std::int64_t saturating_pow(std::int64_t base, std::int64_t e, std::int64_t cap) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e && r < cap; ++i) r *= base;
  return std::min(r, cap);
}

// ---- two cyclic factors, trivial edge group ------------------------------

class FreeProductSplitting final : public GraphOfGroups {
 public:
  FreeProductSplitting(std::int64_t p, std::int64_t q)
      : group_(std::make_shared<FreeProductOfCyclics>(
            std::vector<std::int64_t>{p, q},
            "amalgam:" + factor_name(p) + "*" + factor_name(q))) {}

  GroupPtr group() const override { return group_; }
  bool is_hnn() const override { return false; }
  std::string describe() const override { return group_->name() + " over the trivial group"; }
  std::vector<EdgeLetter> edges() const override {
    return {{"A->B", {}, 0, 1}, {"B->A", {}, 1, 0}};
  }
  bool in_vertex_group(const Element& g, int vertex) const override {
    return g.empty() || (g.size() == 2 && g[0] == vertex);
  }
  bool in_edge_image(const Element& g, int) const override { return g.empty(); }
  std::vector<Element> vertex_elements(int vertex, std::int64_t bound) const override {
    const std::int64_t order = group_->orders()[static_cast<std::size_t>(vertex)];
    std::vector<Element> out;
    if (order == 0) {
      for (std::int64_t k = -bound; k <= bound; ++k)
        out.push_back(group_->times_syllable({}, static_cast<std::size_t>(vertex), k));
    } else {
      for (std::int64_t k = 0; k < order; ++k)
        out.push_back(group_->times_syllable({}, static_cast<std::size_t>(vertex), k));
    }
    return out;
  }
  std::int64_t exponent_bound(std::int64_t length) const override { return length; }
  std::int64_t stratum(const Element& g) const override {
    if (g.empty()) return 0;
    const auto syllables = static_cast<std::int64_t>(g.size() / 2);
    return syllables + (g[0] != 0 ? 1 : 0) - 1;
  }
  Factorization factor(const Element& g) const override {
    Factorization f;
    f.prefix.assign(g.begin(), g.end() - 2);
    f.vertex_part.assign(g.end() - 2, g.end());
    f.edge = g[g.size() - 2] == 1 ? 0 : 1;
    return f;
  }
  Element coset_rep(const Element& g, int vertex) const override {
    if (!g.empty() && g[g.size() - 2] == vertex) return Element(g.begin(), g.end() - 2);
    return g;
  }

 private:
  static std::string factor_name(std::int64_t n) { return n == 0 ? "z" : "z" + std::to_string(n); }
  std::shared_ptr<FreeProductOfCyclics> group_;
};

// ---- <a> *_<c> <b> ------------------------------------------------------------

class CentralSplitting final : public GraphOfGroups {
 public:
  CentralSplitting(std::int64_t p, std::int64_t q) : group_(std::make_shared<CentralAmalgam>(p, q)) {}

  GroupPtr group() const override { return group_; }
  bool is_hnn() const override { return false; }
  std::string describe() const override { return group_->name() + " = <a> *_<c> <b>"; }
  std::vector<EdgeLetter> edges() const override {
    return {{"A->B", {0}, 0, 1}, {"B->A", {0}, 1, 0}};
  }
  bool in_vertex_group(const Element& g, int vertex) const override {
    return g.size() == 1 || (g.size() == 3 && g[1] == vertex);
  }
  bool in_edge_image(const Element& g, int) const override { return g.size() == 1; }
  std::vector<Element> vertex_elements(int vertex, std::int64_t bound) const override {
    std::vector<Element> out;
    const Letter up = static_cast<Letter>(2 * vertex), down = up + 1;
    Element g = group_->identity();
    std::vector<Element> negative;
    for (std::int64_t k = 1; k <= bound; ++k) {
      g = group_->multiply(g, down);
      negative.push_back(g);
    }
    out.assign(negative.rbegin(), negative.rend());
    g = group_->identity();
    out.push_back(g);
    for (std::int64_t k = 1; k <= bound; ++k) {
      g = group_->multiply(g, up);
      out.push_back(g);
    }
    return out;
  }
  // a -> q, b -> p is a homomorphism to Z; generators move by at most max(p, q).
  std::int64_t exponent_bound(std::int64_t length) const override {
    return length * std::max(group_->p(), group_->q());
  }
  std::int64_t stratum(const Element& g) const override {
    if (g.size() == 1) return 0;
    const auto syllables = static_cast<std::int64_t>((g.size() - 1) / 2);
    return syllables + (g[1] != 0 ? 1 : 0) - 1;
  }
  Factorization factor(const Element& g) const override {
    Factorization f;
    f.prefix.assign(g.begin(), g.end() - 2);
    f.vertex_part = {0, g[g.size() - 2], g.back()};
    f.edge = g[g.size() - 2] == 1 ? 0 : 1;
    return f;
  }
  Element coset_rep(const Element& g, int vertex) const override {
    Element r = g;
    r[0] = 0;
    if (r.size() >= 3 && r[r.size() - 2] == vertex) r.resize(r.size() - 2);
    return r;
  }

 private:
  std::shared_ptr<CentralAmalgam> group_;
};

// ---- BS(1,n) as an HNN extension of <a> ------------------------------------------

class BaumslagSolitarSplitting final : public GraphOfGroups {
 public:
  explicit BaumslagSolitarSplitting(std::int64_t n) : group_(std::make_shared<BaumslagSolitar>(n)) {}

  GroupPtr group() const override { return group_; }
  bool is_hnn() const override { return true; }
  std::string describe() const override { return group_->name() + " = <a> *_<a>, t a t^-1 = a^n"; }
  std::vector<EdgeLetter> edges() const override {
    return {{"t", {1, 0, 0}, 0, 0}, {"t^-1", {-1, 0, 0}, 0, 0}};
  }
  bool in_vertex_group(const Element& g, int) const override { return g[0] == 0 && g[1] == 0; }
  bool in_edge_image(const Element& g, int side) const override {
    if (!in_vertex_group(g, 0)) return false;
    return side == 0 || g[2] % group_->n() == 0;
  }
  std::vector<Element> vertex_elements(int, std::int64_t bound) const override {
    std::vector<Element> out;
    for (std::int64_t k = -bound; k <= bound; ++k) out.push_back(group_->make(0, k, 0));
    return out;
  }
  // |a^k| <= L forces |k| <= n^L; capped to keep enumeration finite.
  std::int64_t exponent_bound(std::int64_t length) const override {
    return saturating_pow(std::max<std::int64_t>(group_->n(), 2), length, 1 << 14);
  }
  std::int64_t stratum(const Element& g) const override {
    const auto b = group_->britton(g);
    return b.i + b.j;
  }
  Factorization factor(const Element& g) const override {
    auto b = group_->britton(g);
    Factorization f;
    if (b.j > 0) {
      f.prefix = group_->from_britton({b.i, b.s, b.j - 1});
      f.edge = 0;
      f.vertex_part = group_->identity();
    } else {
      f.prefix = group_->from_britton({b.i - 1, 0, 0});
      f.edge = 1;
      f.vertex_part = group_->make(0, b.s, 0);
    }
    return f;
  }
  // g <a> = {(x + n^k y, k)}: keep k and the fractional part of x n^-k.
  Element coset_rep(const Element& g, int) const override {
    const std::int64_t k = g[0], m = g[1], num = g[2];
    const std::int64_t e = m + k;
    if (group_->n() == 1 || e <= 0) return group_->make(k, 0, 0);
    std::int64_t modulus = 1;
    for (std::int64_t i = 0; i < e; ++i) modulus *= group_->n();
    const std::int64_t frac = ((num % modulus) + modulus) % modulus;
    return group_->make(k, frac, m);
  }

 private:
  std::shared_ptr<BaumslagSolitar> group_;
};

}  // namespace

GraphOfGroupsPtr free_product_splitting(std::int64_t p, std::int64_t q) {
  return std::make_shared<FreeProductSplitting>(p, q);
}
GraphOfGroupsPtr central_amalgam_splitting(std::int64_t p, std::int64_t q) {
  return std::make_shared<CentralSplitting>(p, q);
}
GraphOfGroupsPtr baumslag_solitar_splitting(std::int64_t n) {
  return std::make_shared<BaumslagSolitarSplitting>(n);
}

GraphOfGroupsPtr splitting_for(const std::string& spec) {
  auto group = make_group(spec);
  if (auto fp = std::dynamic_pointer_cast<const FreeProductOfCyclics>(group)) {
    if (fp->orders().size() == 2) return free_product_splitting(fp->orders()[0], fp->orders()[1]);
  }
  if (auto ca = std::dynamic_pointer_cast<const CentralAmalgam>(group))
    return central_amalgam_splitting(ca->p(), ca->q());
  if (auto bs = std::dynamic_pointer_cast<const BaumslagSolitar>(group))
    return baumslag_solitar_splitting(bs->n());
  fail(ErrorKind::kUsage, "no-splitting", "'" + spec + "' has no built-in splitting");
}

// ---- stratification -------------------------------------------------------------

Stratification stratify_words(const GraphOfGroups& gog, const CayleyWindow& window, std::int64_t j_max) {
  const GroupModel& G = *gog.group();
  const auto edges = gog.edges();
  Stratification out;
  std::vector<std::vector<Index>> buckets(static_cast<std::size_t>(j_max + 1));
  std::vector<Index> beyond;
  for (Index i = 0; i < window.size(); ++i) {
    const Element& g = window.elements[i];
    const std::int64_t j = gog.stratum(g);
    if (j > j_max) {
      beyond.push_back(i);
      continue;
    }
    buckets[static_cast<std::size_t>(j)].push_back(i);
    std::string problem;
    if (j == 0) {
      if (!gog.in_vertex_group(g, 0)) problem = "K_0 element outside the base vertex group";
    } else {
      const Factorization f = gog.factor(g);
      const EdgeLetter& a = edges.at(f.edge);
      if (gog.stratum(f.prefix) != j - 1)
        problem = "prefix not in K_" + std::to_string(j - 1);
      else if (!gog.in_vertex_group(f.vertex_part, a.target))
        problem = "vertex part outside G_t";
      else if (G.product(G.product(f.prefix, a.element), f.vertex_part) != g)
        problem = "factorization does not multiply back";
    }
    if (!problem.empty()) {
      out.factoring_ok = false;
      fail(ErrorKind::kCertificate, "non-factorable", G.format(g) + ": " + problem);
    }
  }
  for (auto& b : buckets) out.strata.emplace_back(std::move(b));
  out.beyond = PointSet(std::move(beyond));

  std::size_t total = out.beyond.size();
  PointSet seen = out.beyond;
  for (const auto& s : out.strata) {
    total += s.size();
    seen = set_union(seen, s);
  }
  out.partition_ok = total == window.size() && seen.size() == window.size();
  if (!out.partition_ok) out.failures.push_back("strata do not partition the window");
  return out;
}

// ---- separation -------------------------------------------------------------------

SeparationReport separation_audit(const GraphOfGroups& gog, const CayleyWindow& window,
                                  const PointSet& stratum, std::size_t edge, std::int64_t r) {
  const GroupModel& G = *gog.group();
  const EdgeLetter a = gog.edges().at(edge);
  const int t = a.target;
  const int side = gog.is_hnn() ? static_cast<int>(edge) : t;
  SeparationReport rep;
  rep.r = r;

  const std::int64_t bound = gog.exponent_bound(2 * window.radius + 2);
  const auto vertex_part = gog.vertex_elements(t, bound);
  std::vector<Element> edge_image;
  for (const auto& h : vertex_part)
    if (gog.in_edge_image(h, side)) edge_image.push_back(h);

  std::vector<Index> ball_r;
  for (Index i = 0; i < window.size(); ++i)
    if (window.length[i] <= r) ball_r.push_back(i);

  std::vector<Element> xa;
  std::vector<PointSet> cosets;
  std::vector<Index> y_members;
  for (Index x : stratum) {
    Element base = G.product(window.elements[x], a.element);
    if (!window.find(base))
      fail(ErrorKind::kPrecondition, "window-too-small",
           G.format(base) + " lies outside the window of radius " + std::to_string(window.radius));
    std::vector<Index> members;
    for (const auto& h : vertex_part)
      if (auto idx = window.find(G.product(base, h))) members.push_back(*idx);
    cosets.emplace_back(std::move(members));
    for (const auto& c : edge_image) {
      const Element bc = G.product(base, c);
      for (Index w : ball_r)
        if (auto idx = window.find(G.product(bc, window.elements[w]))) y_members.push_back(*idx);
    }
    xa.push_back(std::move(base));
  }
  rep.y_r = PointSet(std::move(y_members));

  // coset identity: (xa)^-1 x'a in G_t  <=>  the enumerated cosets coincide
  std::map<std::vector<Index>, std::size_t> distinct;
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    const Element inv = G.inverse(xa[i]);
    for (std::size_t j = i + 1; j < cosets.size(); ++j) {
      ++rep.pairs_checked;
      const bool predicate = gog.in_vertex_group(G.product(inv, xa[j]), t);
      const bool equal = cosets[i] == cosets[j];
      const bool overlap = !set_intersection(cosets[i], cosets[j]).empty();
      if (predicate != equal || (!equal && overlap)) {
        rep.coset_identity_ok = false;
        if (rep.failures.size() < 20)
          rep.failures.push_back("coset criterion mismatch for " + G.format(xa[i]) + ", " +
                                 G.format(xa[j]));
      }
    }
    distinct.emplace(cosets[i].members(), i);
  }

  for (const auto& [members, i] : distinct) {
    PointSet trimmed = set_difference(cosets[i], rep.y_r);
    rep.trimmed.push_back(std::move(trimmed));
  }
  rep.separation = family_separation(*window.space, rep.trimmed);
  rep.separated = !rep.separation || *rep.separation > Rational(r);
  if (!rep.separated)
    rep.failures.push_back("trimmed cosets at distance " + format_rational(*rep.separation) +
                           " <= r = " + std::to_string(r));
  return rep;
}

// ---- Bass-Serre tree -------------------------------------------------------------

BassSerreWindow bass_serre_tree_window(const GraphOfGroups& gog, std::int64_t tree_radius,
                                       std::int64_t group_radius) {
  const GroupPtr group = gog.group();
  const GroupModel& G = *group;
  const CayleyWindow ball = cayley_window(group, tree_radius);

  auto vertices = std::make_shared<std::vector<TreeVertex>>();
  auto lookup = std::make_shared<std::map<std::pair<int, Element>, Index>>();
  auto vertex_of = [&](int type, const Element& g, bool create) -> std::optional<Index> {
    std::pair<int, Element> key{type, gog.coset_rep(g, type)};
    auto it = lookup->find(key);
    if (it != lookup->end()) return it->second;
    if (!create) return std::nullopt;
    const auto id = static_cast<Index>(vertices->size());
    vertices->push_back({type, key.second});
    lookup->emplace(std::move(key), id);
    return id;
  };

  for (const auto& g : ball.elements)
    for (int v = 0; v < gog.vertex_count(); ++v) vertex_of(v, g, true);

  std::set<std::pair<Index, Index>> edge_set;
  const Element t = gog.is_hnn() ? gog.edges()[0].element : Element{};
  for (const auto& g : ball.elements) {
    const Index u = *vertex_of(0, g, false);
    std::optional<Index> w = gog.is_hnn() ? vertex_of(0, G.product(g, t), false) : vertex_of(1, g, false);
    if (!w || *w == u) continue;
    edge_set.emplace(std::min(u, *w), std::max(u, *w));
  }

  const std::size_t nv = vertices->size();
  std::vector<std::vector<Index>> adjacency(nv);
  for (auto [u, w] : edge_set) {
    adjacency[u].push_back(w);
    adjacency[w].push_back(u);
  }
  std::vector<std::string> labels;
  static const char* names[] = {"A", "B"};
  for (const auto& v : *vertices) labels.push_back(std::string(names[v.type]) + ":" + G.format(v.rep));

  BassSerreWindow out;
  out.tree = std::make_shared<FiniteMetricSpace>(graph_metric(adjacency, std::move(labels), Index{0}));
  out.acyclic = edge_set.size() + 1 == nv;
  for (const auto& adj : adjacency) out.degree.push_back(adj.size());
  std::set<int> types;
  for (const auto& v : *vertices) types.insert(v.type);
  out.quotient_ok = static_cast<int>(types.size()) == gog.vertex_count();
  out.vertices = *vertices;

  out.group = cayley_window(group, group_radius);
  const GraphOfGroups* split = &gog;
  auto keep_group = group;
  out.action = make_action(
      out.group, out.tree, 0,
      [vertices, lookup, split, keep_group](const Element& g, Index p) -> std::optional<Index> {
        const TreeVertex& v = (*vertices)[p];
        std::pair<int, Element> key{v.type, split->coset_rep(keep_group->product(g, v.rep), v.type)};
        auto it = lookup->find(key);
        if (it == lookup->end()) return std::nullopt;
        return it->second;
      });
  return out;
}

}  // namespace asdim
