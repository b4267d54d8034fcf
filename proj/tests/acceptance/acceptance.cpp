// Acceptance run: one [PASS]/[FAIL] line per criterion. Expected values are
// literals; every comparison goes through a second, independent computation
// where one exists.
#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "saxl/catalog.hpp"
#include "saxl/closed_forms.hpp"
#include "saxl/conjugacy.hpp"
#include "saxl/constructions.hpp"
#include "saxl/delta_engine.hpp"
#include "saxl/number_theory.hpp"
#include "saxl/saxl_graph.hpp"
#include "saxl/suborbits.hpp"

using namespace saxl;

namespace {

// Every report and engine result produced along the way, for criterion 11.
struct Seen {
  std::vector<SubdegreeReport> reports;
  std::vector<IncidenceMatrix> M, M_inv;
  std::vector<const GroupAction *> actions;
};
Seen seen;

std::deque<GroupAction> keep; // owns the actions seen.actions points into

const GroupAction &hold(GroupAction a) {
  keep.push_back(std::move(a));
  return keep.back();
}

class Failures {
public:
  void expect(bool ok, const std::string &what) {
    if (!ok)
      msgs_.push_back(what);
  }
  template <class A, class B> void equal(const A &got, const B &want, const std::string &what) {
    if (!(got == want))
      msgs_.push_back(what + ": got " + str(got) + ", expected " + str(want));
  }
  bool ok() const { return msgs_.empty(); }
  std::string text() const {
    std::string s;
    for (const auto &m : msgs_)
      s += (s.empty() ? "" : "; ") + m;
    return s;
  }

private:
  static std::string str(const BigInt &v) { return to_string(v); }
  static std::string str(std::size_t v) { return std::to_string(v); }
  static std::string str(const std::vector<BigInt> &v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
      s += (i ? ", " : "") + to_string(v[i]);
    return s + ")";
  }
  std::vector<std::string> msgs_;
};

SubdegreeReport brute(const GroupAction &a) {
  SubdegreeReport r = suborbits_bruteforce(a.space, a.G, a.H, a.name);
  seen.reports.push_back(r);
  seen.actions.push_back(&a);
  return r;
}

const GroupAction &entry(const std::string &name) { return hold(find_entry(name)->build(kDefaultLabelCap)); }

bool same_lists(const SubdegreeReport &a, const SubdegreeReport &b) {
  return a.entries == b.entries && a.valency == b.valency;
}

int failures = 0;

void criterion(int n, const std::string &title, const std::function<void(Failures &)> &body) {
  Failures f;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(f);
  } catch (const std::exception &e) {
    f.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!f.ok())
    ++failures;
  std::printf("[%s] criterion %d: %s (%.1fs)%s%s\n", f.ok() ? "PASS" : "FAIL", n, title.c_str(), secs,
              f.ok() ? "" : " -- ", f.text().c_str());
  std::fflush(stdout);
}

// |N_{S_p}(C)| for C of order s generated by a product of (p-1)/s disjoint
// s-cycles: centralizer Z_s wr S_m, times phi(s) for the power maps.
BigInt sym_normalizer(std::uint64_t p, std::uint64_t s) {
  const std::uint64_t m = (p - 1) / s;
  return power(big(s), static_cast<unsigned>(m)) * factorial(m) * big(euler_phi(s));
}

} // namespace

int main() {
  criterion(1, "PGL3(7) worked example: valency 31122, Delta and delta exact", [](Failures &f) {
    const GroupAction &a = entry("pgl3_7");
    const CrossValidation cv = cross_validate(a.space, a.G, a.H, a.name);
    seen.reports.push_back(cv.bruteforce);
    seen.actions.push_back(&a);
    f.equal(cv.bruteforce.valency, BigInt(31122), "brute-force valency");
    f.expect(cv.engine.has_value(), "engine ran");
    if (!cv.engine)
      return;
    const auto &e = *cv.engine;
    seen.reports.push_back(e.report);
    seen.M.push_back(e.M);
    seen.M_inv.push_back(e.M_inv);
    f.equal(e.Delta, std::vector<BigInt>{5630688, 4104, 6669, 513, 171}, "Delta");
    f.equal(e.delta, std::vector<BigInt>{5321862, 3591, 6156, 342, 171}, "delta");
    f.equal(e.report.valency, BigInt(31122), "engine valency");
    f.expect(same_lists(e.report, cv.bruteforce), "engine and brute force subdegrees differ");
  });

  criterion(2, "small cases: brute-force valencies 6, 20, 32, 16, 432", [](Failures &f) {
    const std::vector<std::pair<const char *, long>> rows{
        {"a5_s3", 6}, {"m10_agl15", 20}, {"m10_8colon2", 32}, {"pgl2_9_d16", 16}, {"a9_asl23", 432}};
    for (auto [name, v] : rows)
      f.equal(brute(entry(name)).valency, BigInt(v), name);
  });

  criterion(3, "val_sym_p(7), val_sym_p(11) equal brute force, with multiplicities", [](Failures &f) {
    for (std::uint64_t p : {7, 11}) {
      const SubdegreeReport r = brute(hold(build_sym_alt_action(p, SymAlt::kSym)));
      const std::string tag = "S" + std::to_string(p);
      f.equal(r.valency, val_sym_p(p), tag + " valency");
      for (std::uint64_t d : divisors(p - 1))
        if (d != p - 1)
          f.equal(r.multiplicity(big(d * p)), mult_sym_p(p, d), tag + " m(" + std::to_string(d * p) + ")");
      f.expect(same_lists(r, sym_alt_report(SymAlt::kSym, p)), tag + " subdegree lists differ");
    }
    f.equal(val_sym_p(7), BigInt(42), "val_sym_p(7)");
  });

  criterion(4, "Frobenius identity for 7 <= p <= 101, sym and alt", [](Failures &f) {
    for (std::uint64_t p = 7; p <= 101; ++p) {
      if (!is_prime(p))
        continue;
      for (SymAlt v : {SymAlt::kSym, SymAlt::kAlt}) {
        const bool alt = v == SymAlt::kAlt;
        const std::string tag = (alt ? "A" : "S") + std::to_string(p);
        FrobeniusInput in;
        in.k = p;
        in.l = alt ? (p - 1) / 2 : p - 1;
        in.index = factorial(p - 2); // p! / (p (p-1)), same for A_p
        for (std::uint64_t s : divisors(in.l))
          if (s > 1)
            in.normalizer_orders[s] = alt ? BigInt(sym_normalizer(p, s) / 2) : sym_normalizer(p, s);
        const BigInt val = frobenius_valency(in);
        f.equal(alt ? val_alt_p(p) : val_sym_p(p), val, tag);
        const auto mults = frobenius_multiplicities(in);
        BigInt total = 1 + val;
        for (const auto &e : mults) {
          f.expect(e.multiplicity >= 0, tag + " negative multiplicity");
          total += e.length * e.multiplicity;
        }
        f.equal(total, in.index, tag + " sum rule");
        f.expect(val % (in.k * in.l) == 0, tag + " valency divisible by |H|");
      }
    }
  });

  criterion(5, "PSL2 valencies vs brute force; PGL2 nonsplit has no regular suborbit", [](Failures &f) {
    auto run = [&](std::uint64_t q, Torus t, Linear2 k) {
      const GroupAction &a = hold(build_psl2_action(q, t, k));
      const SubdegreeReport r = brute(a);
      const std::string tag = a.name;
      if (k == Linear2::kPSL) {
        f.equal(r.valency, val_psl2(q, t), tag);
      } else {
        f.equal(r.multiplicity(big(a.H.order())), BigInt(0), tag + " regular suborbits");
        f.equal(val_pgl2(q, t), BigInt(0), tag + " closed form");
      }
    };
    for (std::uint64_t q : {13, 17, 19, 23, 29})
      run(q, Torus::kSplit, Linear2::kPSL);
    for (std::uint64_t q : {11, 13, 17, 19})
      run(q, Torus::kNonsplit, Linear2::kPSL);
    for (std::uint64_t q : {7, 9, 11, 13})
      run(q, Torus::kNonsplit, Linear2::kPGL);
  });

  criterion(6, "PGL2(q) split Saxl graph is the Johnson graph J(q+1,2)", [](Failures &f) {
    for (std::uint64_t q : {7, 9, 11, 13, 16, 17}) {
      const GroupAction &a = hold(build_psl2_action(q, Torus::kSplit, Linear2::kPGL));
      const std::string tag = "q=" + std::to_string(q);
      const SaxlGraph g = saxl_graph(a.space, a.G, a.H);
      std::set<std::pair<std::uint32_t, std::uint32_t>> edges(g.edges.begin(), g.edges.end());
      std::size_t expected_edges = 0;
      for (std::uint32_t u = 0; u < a.space.size(); ++u) {
        const auto su = a.space.subset_at(u);
        for (std::uint32_t v = u + 1; v < a.space.size(); ++v) {
          const auto sv = a.space.subset_at(v);
          std::size_t common = 0;
          for (auto x : su)
            for (auto y : sv)
              common += x == y;
          const bool johnson = common == 1;
          expected_edges += johnson;
          if (johnson != edges.count({u, v})) {
            f.expect(false, tag + " adjacency differs at " + std::to_string(u) + "," + std::to_string(v));
            return;
          }
        }
      }
      f.equal(edges.size(), expected_edges, tag + " edges");
      // neighbours of the base: labels with trivial stabiliser in H
      std::size_t regular = 0;
      for (std::size_t l = 0; l < a.space.size(); ++l) {
        bool fixed = false;
        for (const auto &h : a.H.elements())
          fixed = fixed || (!h.is_identity() && a.space.act(l, h) == l);
        regular += !fixed;
      }
      f.equal(regular, std::size_t(2 * (q - 1)), tag + " valency");
      f.equal(g.valency(), std::size_t(2 * (q - 1)), tag + " exported valency");
    }
  });

  criterion(7, "Singer cases: L3(2) 0, GL5(2) 64170 m(31)=11, PGL3(7) m(57)=31 m(19)=2, L3(7) 32490 m(19)=23",
            [](Failures &f) {
              const SubdegreeReport l32 = brute(entry("l3_2"));
              f.equal(l32.valency, BigInt(0), "L3(2) valency");
              const SubdegreeReport g52 = brute(entry("gl5_2"));
              f.equal(g52.valency, BigInt(64170), "GL5(2) valency");
              f.equal(g52.multiplicity(31), BigInt(11), "GL5(2) m(31)");
              const SubdegreeReport p37 = brute(entry("pgl3_7"));
              f.equal(p37.multiplicity(57), BigInt(31), "PGL3(7) m(57)");
              f.equal(p37.multiplicity(19), BigInt(2), "PGL3(7) m(19)");
              const SubdegreeReport s37 = brute(entry("l3_7_socle"));
              f.equal(s37.valency, BigInt(32490), "L3(7) valency");
              f.equal(s37.multiplicity(19), BigInt(23), "L3(7) m(19)");
              f.expect(same_lists(s37, lr_eps_subdegrees(3, 7, Sign::kPlus, LrVariant::kSocle)),
                       "L3(7) closed form differs");
              f.expect(same_lists(g52, lr_eps_subdegrees(5, 2, Sign::kPlus, LrVariant::kFull)),
                       "GL5(2) closed form differs");
            });

  criterion(8, "|N(<x,sigma>)| = 27 in PGL3(7) and PGL3(4)", [](Failures &f) {
    for (std::uint64_t q : {7, 4}) {
      const GroupAction a = build_singer_normalizer_action(3, q, LrVariant::kFull);
      const Subgroup A = Subgroup::generated_by({a.named.at("x"), a.named.at("sigma")}, a.space.degree());
      f.equal(A.order(), std::size_t(9), "|<x,sigma>| q=" + std::to_string(q));
      f.equal(normalizer_order(a.G, A), BigInt(27), "q=" + std::to_string(q));
    }
  });

  criterion(9, "M23 on 40320 points: brute force equals Frobenius valency, odd", [](Failures &f) {
    const GroupAction &a = entry("m23_23colon11");
    f.equal(a.space.size(), std::size_t(40320), "degree");
    const SubdegreeReport r = brute(a);
    const Permutation *y = nullptr;
    for (const auto &h : a.H.elements())
      if (h.order() == 11) {
        y = &h;
        break;
      }
    f.expect(y != nullptr, "element of order 11 in H");
    if (!y)
      return;
    const BigInt N = normalizer_order(a.G, Subgroup::generated_by({*y}, a.space.degree()));
    const FrobeniusInput in{23, 11, {{11, N}}, big(a.space.size())};
    f.equal(r.valency, frobenius_valency(in), "valency");
    f.expect(r.valency % 2 == 1, "valency " + to_string(r.valency) + " is even");
  });

  criterion(10, "no normal arc stabilisers on any primitive catalog entry", [](Failures &f) {
    for (const auto &e : catalog()) {
      if (!e.primitive)
        continue;
      const GroupAction a = e.build(kDefaultLabelCap);
      f.expect(is_primitive(a.space, a.G), e.name + " is not primitive");
      const auto hits = scan_normal_arc_stabilisers(a.space, a.G, a.H);
      f.equal(hits.size(), std::size_t(0), e.name);
    }
  });

  criterion(11, "sum rule, valency mod |H|, M M^-1 = I, orbit-stabilizer, right action", [](Failures &f) {
    for (const auto &r : seen.reports) {
      BigInt total = 0;
      for (const auto &e : r.entries)
        total += e.length * e.multiplicity;
      f.equal(total, r.index, r.group_name + " sum rule");
      f.expect(r.valency % r.order_H == 0, r.group_name + " valency mod |H|");
      f.equal(r.valency, r.order_H * r.multiplicity(r.order_H), r.group_name + " valency = |H| m(|H|)");
    }
    for (std::size_t i = 0; i < seen.M.size(); ++i) {
      f.expect(multiply(seen.M[i], seen.M_inv[i]).is_identity(), "M M^-1");
      f.expect(multiply(seen.M_inv[i], seen.M[i]).is_identity(), "M^-1 M");
    }
    std::mt19937_64 rng(1234);
    for (const GroupAction *a : seen.actions) {
      f.equal(big(a->space.size()) * static_cast<unsigned long>(a->H.order()), a->G.order(), a->name + " |G:H||H|");
      std::uniform_int_distribution<std::size_t> pick(0, a->space.size() - 1);
      for (int i = 0; i < 1000; ++i) {
        const Permutation g = a->G.random_element(rng), h = a->G.random_element(rng);
        const std::size_t l = pick(rng);
        if (a->space.act(a->space.act(l, g), h) != a->space.act(l, compose(g, h))) {
          f.expect(false, a->name + " is not a right action");
          break;
        }
      }
    }
    f.expect(seen.reports.size() >= 20, "reports checked: " + std::to_string(seen.reports.size()));
  });

  return failures == 0 ? 0 : 1;
}
