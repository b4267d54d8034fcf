#include "saxl/delta_engine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "saxl/conjugacy.hpp"

namespace saxl {

// ---- arc stabilisers ----

std::vector<ArcStabiliserClass> arc_stabilisers(const SuborbitPartition &part, const ActionSpace &space,
                                                const Subgroup &H, const SubgroupClassTable &table) {
  const auto &grp = table.ambient();
  std::vector<char> present(table.size(), 0);
  present.front() = 1;      // trivial group
  present.back() = 1;       // H
  for (std::size_t i = 0; i < part.size(); ++i) {
    if (part.lengths[i] == H.order())
      continue;
    Subgroup A = label_stabiliser_in(space, H, part.representatives[i]);
    if (A.order() * part.lengths[i] != H.order())
      throw Inconsistency("orbit-stabiliser fails for a suborbit representative");
    present[table.class_of(grp.from_subgroup(A))] = 1;
  }
  std::vector<ArcStabiliserClass> out;
  for (std::size_t c = 0; c < table.size(); ++c) {
    if (!present[c])
      continue;
    ArcStabiliserClass a;
    a.representative = table.representative(c);
    a.class_index = c;
    a.h_class_size = table.classes()[c].class_size;
    a.h_normalizer_order = table.classes()[c].normalizer_order;
    a.fused_classes = {c};
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<ArcStabiliserClass> arc_stabilisers(const ActionSpace &space, const PermGroup &G,
                                                const Subgroup &H, const SubgroupClassTable &table) {
  return arc_stabilisers(suborbits(space, G, H), space, H, table);
}

// ---- conjugacy oracle ----

std::vector<std::vector<std::size_t>> ConjugacyOracle::signature(const Subgroup &A) {
  std::vector<std::vector<std::size_t>> sig;
  for (const auto &e : A.elements())
    sig.push_back(e.cycle_type());
  std::sort(sig.begin(), sig.end());
  return sig;
}

const ActionSpace &ConjugacyOracle::space_for(const Subgroup &A) {
  for (const auto &[sub, sp] : spaces_)
    if (sub == A)
      return sp;
  spaces_.emplace_back(A, ActionSpace::conjugates(G_.generators(), G_.degree(), A, cap_));
  return spaces_.back().second;
}

void ConjugacyOracle::hint_normalizer_order(const Subgroup &A, BigInt order) {
  hints_.emplace_back(A, std::move(order));
}

BigInt ConjugacyOracle::normalizer_order(const Subgroup &A) {
  if (A.order() == 1)
    return G_.order();
  for (const auto &[sub, n] : hints_)
    if (sub == A)
      return n;
  const auto &sp = space_for(A);
  if (G_.order() % static_cast<unsigned long>(sp.size()) != 0)
    throw Inconsistency("conjugacy class length does not divide |G|");
  return G_.order() / static_cast<unsigned long>(sp.size());
}

bool ConjugacyOracle::conjugate(const Subgroup &A, const Subgroup &B) {
  if (A.order() != B.order())
    return false;
  if (A == B)
    return true;
  if (signature(A) != signature(B))
    return false;
  return space_for(A).find_subgroup(B).has_value();
}

// ---- fusion ----

std::vector<ArcStabiliserClass> fuse_equivalent(const std::vector<ArcStabiliserClass> &classes,
                                                const SubgroupClassTable &table, ConjugacyOracle &oracle) {
  const std::size_t n = classes.size();
  const auto &grp = table.ambient();
  std::vector<ElementSet> sets;
  for (const auto &c : classes)
    sets.push_back(grp.from_subgroup(c.representative));
  auto eta = [&](std::size_t a, std::size_t b) { return table.eta(sets[a], classes[b].class_index); };

  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t x) {
    while (root[x] != x)
      x = root[x] = root[root[x]];
    return x;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (find(a) == find(b))
        continue;
      const auto &A = classes[a], &B = classes[b];
      if (A.representative.order() != B.representative.order())
        continue;
      if (A.h_normalizer_order != B.h_normalizer_order) // (E2)
        continue;
      bool e3 = true;
      for (std::size_t c = 0; c < n && e3; ++c) {
        if (c == a || c == b)
          continue;
        e3 = eta(a, c) == eta(b, c) && eta(c, a) == eta(c, b);
      }
      if (!e3)
        continue;
      if (!oracle.conjugate(A.representative, B.representative)) // (E1)
        continue;
      root[find(b)] = find(a);
    }

  std::vector<ArcStabiliserClass> out;
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find(i);
    auto it = slot.find(r);
    if (it == slot.end()) {
      slot.emplace(r, out.size());
      out.push_back(classes[i]);
      out.back().fused_classes = {classes[i].class_index};
      out.back().tilde_class_size = 1;
    } else {
      auto &dst = out[it->second];
      dst.fused_classes.push_back(classes[i].class_index);
      dst.tilde_class_size = dst.fused_classes.size();
    }
  }
  return out;
}

// ---- solve ----

DeltaEngineResult solve_delta_system(const DeltaSystem &sys) {
  const std::size_t n = sys.labels.size();
  if (sys.orders.size() != n || sys.h_normalizer_orders.size() != n || sys.tilde_sizes.size() != n ||
      sys.M.size() != n || sys.Delta.size() != n)
    throw std::invalid_argument("delta system: inconsistent sizes");
  DeltaEngineResult res;
  res.M = sys.M;
  res.M.labels = sys.labels;
  res.M_inv = invert_incidence(res.M);
  res.Delta = sys.Delta;
  res.delta = multiply(res.M_inv, sys.Delta);

  for (std::size_t i = 0; i < n; ++i)
    if (res.delta[i] < 0)
      res.inconsistencies.push_back("negative delta(" + sys.labels[i] + ") = " + to_string(res.delta[i]));

  SubdegreeReport &r = res.report;
  r.group_name = sys.group_name;
  r.order_G = sys.order_G;
  r.order_H = sys.order_H;
  r.index = sys.order_G / sys.order_H;
  r.method = Method::kDeltaEngine;

  std::map<BigInt, BigRational> acc; // subdegree n -> sum of delta(A)|Ã|/|N_H(A)|
  bool have_trivial = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (sys.orders[i] == 1) {
      have_trivial = true;
      if (res.delta[i] % sys.order_H != 0)
        res.inconsistencies.push_back("delta(1) is not divisible by |H|");
      r.valency = res.delta[i] / sys.order_H;
    }
    if (sys.order_H % static_cast<unsigned long>(sys.orders[i]) != 0) {
      res.inconsistencies.push_back("|A| does not divide |H| for " + sys.labels[i]);
      continue;
    }
    BigInt len = sys.order_H / static_cast<unsigned long>(sys.orders[i]);
    BigRational term(res.delta[i] * static_cast<unsigned long>(sys.tilde_sizes[i]),
                     big(sys.h_normalizer_orders[i]));
    term.canonicalize();
    acc[len] += term;
  }
  if (!have_trivial)
    res.inconsistencies.push_back("the trivial group is missing from the class list");
  for (auto &[len, sum] : acc) {
    BigRational m = sum / BigRational(len);
    m.canonicalize();
    if (m.get_den() != 1) {
      res.inconsistencies.push_back("multiplicity of subdegree " + to_string(len) + " is " + m.get_str());
      continue;
    }
    add_subdegree(r, len, m.get_num());
  }
  finalize_checks(r);
  return res;
}

DeltaEngineResult delta_engine(const PermGroup &G, const Subgroup &H, const SubgroupClassTable &table,
                               std::vector<ArcStabiliserClass> tilde_classes, const std::string &group_name,
                               ConjugacyOracle &oracle) {
  const auto &grp = table.ambient();
  const std::size_t n = tilde_classes.size();
  if (grp.order() != H.order())
    throw std::invalid_argument("class table is not the table of H");
  std::sort(tilde_classes.begin(), tilde_classes.end(),
            [](const ArcStabiliserClass &a, const ArcStabiliserClass &b) { return a.class_index < b.class_index; });

  DeltaSystem sys;
  sys.group_name = group_name;
  sys.order_G = G.order();
  sys.order_H = big(H.order());
  sys.M.entries.assign(n, std::vector<BigInt>(n, 0));
  std::vector<ElementSet> sets;
  for (const auto &c : tilde_classes)
    sets.push_back(grp.from_subgroup(c.representative));
  for (std::size_t i = 0; i < n; ++i) {
    const auto &A = tilde_classes[i];
    sys.labels.push_back("C" + std::to_string(A.class_index) + "|" + std::to_string(A.representative.order()));
    sys.orders.push_back(A.representative.order());
    sys.h_normalizer_orders.push_back(A.h_normalizer_order);
    sys.tilde_sizes.push_back(A.tilde_class_size);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        sys.M.entries[i][j] = 1;
        continue;
      }
      std::size_t s = 0;
      for (std::size_t c : tilde_classes[j].fused_classes)
        s += table.eta(sets[i], c);
      sys.M.entries[i][j] = static_cast<unsigned long>(s);
    }
    // |Delta(A)| = |N_G(A)| * (sum of H-class sizes over class representatives G-conjugate to A)
    if (A.representative.order() == 1) {
      sys.Delta.push_back(G.order());
      continue;
    }
    BigInt norm = oracle.normalizer_order(A.representative);
    std::size_t classes_in_orbit = 0;
    for (std::size_t c = 0; c < table.size(); ++c) {
      const auto &cls = table.classes()[c];
      if (cls.order != A.representative.order())
        continue;
      if (c == A.class_index || oracle.conjugate(A.representative, table.representative(c)))
        classes_in_orbit += cls.class_size;
    }
    sys.Delta.push_back(norm * static_cast<unsigned long>(classes_in_orbit));
  }

  DeltaEngineResult res = solve_delta_system(sys);
  for (std::size_t i = 0; i < n; ++i) {
    tilde_classes[i].Delta_size = res.Delta[i];
    tilde_classes[i].delta_size = res.delta[i];
  }
  res.classes = std::move(tilde_classes);
  return res;
}

namespace {

// H^g = H iff H fixes the image of the base label, so |N_G(H)| = |H| * #fixed labels.
std::size_t count_fixed(const SuborbitPartition &part) {
  return static_cast<std::size_t>(std::count(part.lengths.begin(), part.lengths.end(), 1));
}

} // namespace

DeltaEngineResult run_delta_engine(const ActionSpace &space, const PermGroup &G, const Subgroup &H,
                                   const std::string &group_name, std::size_t cap) {
  SubgroupClassTable table(H);
  auto part = suborbits(space, G, H);
  auto classes = arc_stabilisers(part, space, H, table);
  ConjugacyOracle oracle(G, cap);
  oracle.hint_normalizer_order(H, big(H.order()) * static_cast<unsigned long>(count_fixed(part)));
  auto fused = fuse_equivalent(classes, table, oracle);
  return delta_engine(G, H, table, std::move(fused), group_name, oracle);
}

CrossValidation cross_validate(const ActionSpace &space, const PermGroup &G, const Subgroup &H,
                               const std::string &group_name, std::size_t cap) {
  CrossValidation cv;
  auto part = suborbits(space, G, H);
  cv.bruteforce = report_from_partition(part, G, H, group_name);
  cv.primitive = is_primitive(space, G);
  if (!cv.primitive) {
    cv.combined = cv.bruteforce;
    return cv;
  }
  SubgroupClassTable table(H);
  auto classes = arc_stabilisers(part, space, H, table);
  ConjugacyOracle oracle(G, cap);
  oracle.hint_normalizer_order(H, big(H.order()) * static_cast<unsigned long>(count_fixed(part)));
  auto fused = fuse_equivalent(classes, table, oracle);
  cv.engine = delta_engine(G, H, table, std::move(fused), group_name, oracle);
  bool agree = cv.engine->inconsistencies.empty() && same_subdegrees(cv.bruteforce, cv.engine->report);
  cv.bruteforce.checks.cross_method_agreement = agree;
  cv.engine->report.checks.cross_method_agreement = agree;
  cv.combined = cv.engine->report;
  return cv;
}

} // namespace saxl
