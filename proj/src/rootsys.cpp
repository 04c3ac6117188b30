#include "qh/rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qh {

std::string lie_type_name(LieType t) {
  switch (t) {
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::F4: return "F4";
    case LieType::G2: return "G2";
  }
  return "?";
}

Weight RootSystem::simple_root(int i) const {
  Weight a(rank, 0);
  for (int r = 0; r < rank; ++r) a[r] = cartan[r][i];
  return a;
}

Weight RootSystem::reflect(const Weight& w, int i) const {
  Weight out = w;
  const Coord c = w[i];
  if (c == 0) return out;
  for (int r = 0; r < rank; ++r) out[r] -= c * cartan[r][i];
  return out;
}

Coord RootSystem::pair_coroot(const Weight& lambda, const Root& gamma) const {
  // gamma^vee = sum_i c_i (len2_i / len2_gamma) alpha_i^vee, so
  // <lambda, gamma^vee> = sum_i c_i len2_i lambda_i / len2_gamma.
  Coord num = 0;
  for (int i = 0; i < rank; ++i)
    num += gamma.simple[i] * simple_len2[i] * lambda[i];
  if (num % gamma.len2 != 0)
    throw std::logic_error("non-integral coroot pairing");
  return num / gamma.len2;
}

namespace {

// cartan[i][j] = <alpha_j, alpha_i^vee>.
std::vector<std::vector<Coord>> cartan_matrix(LieType type, int rank) {
  std::vector<std::vector<Coord>> c(rank, std::vector<Coord>(rank, 0));
  for (int i = 0; i < rank; ++i) c[i][i] = 2;
  auto bond = [&](int i, int j, Coord cij, Coord cji) {
    c[i][j] = cij;  // <alpha_j, alpha_i^vee>
    c[j][i] = cji;
  };
  switch (type) {
    case LieType::B:
      // Bourbaki: alpha_rank is the short root.
      for (int i = 0; i + 1 < rank; ++i) bond(i, i + 1, -1, -1);
      if (rank >= 2) c[rank - 1][rank - 2] = -2;  // <alpha_{n-1}, alpha_n^vee>
      break;
    case LieType::C:
      // Bourbaki: alpha_rank is the long root.
      for (int i = 0; i + 1 < rank; ++i) bond(i, i + 1, -1, -1);
      if (rank >= 2) c[rank - 2][rank - 1] = -2;  // <alpha_n, alpha_{n-1}^vee>
      break;
    case LieType::F4:
      // Bourbaki: alpha_1, alpha_2 long; alpha_3, alpha_4 short.
      bond(0, 1, -1, -1);
      bond(1, 2, -1, -2);  // <alpha_3,alpha_2^vee>=-1, <alpha_2,alpha_3^vee>=-2
      bond(2, 3, -1, -1);
      break;
    case LieType::G2:
      // Index 0 = alpha (short), index 1 = beta (long).
      bond(0, 1, -3, -1);  // <beta, alpha^vee> = -3, <alpha, beta^vee> = -1
      break;
  }
  return c;
}

std::vector<Coord> simple_lengths(LieType type, int rank) {
  std::vector<Coord> l(rank, 2);
  switch (type) {
    case LieType::B:
      l[rank - 1] = 1;
      break;
    case LieType::C:
      for (int i = 0; i + 1 < rank; ++i) l[i] = 1;
      l[rank - 1] = 2;
      break;
    case LieType::F4:
      l[2] = l[3] = 1;
      break;
    case LieType::G2:
      l[0] = 2;
      l[1] = 6;
      break;
  }
  return l;
}

}  // namespace

RootSystem build_root_system(LieType type, int rank) {
  if (type == LieType::F4) rank = 4;
  if (type == LieType::G2) rank = 2;
  if (rank < 2) throw std::invalid_argument("rank must be at least 2");
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.cartan = cartan_matrix(type, rank);
  rs.simple_len2 = simple_lengths(type, rank);
  rs.rho.assign(rank, 1);

  // Close the simple roots under all simple reflections, tracking the
  // simple-root expansion to recognize positivity.
  std::set<std::vector<Coord>> seen;
  std::deque<Root> queue;
  for (int i = 0; i < rank; ++i) {
    Root r;
    r.fw = rs.simple_root(i);
    r.simple.assign(rank, 0);
    r.simple[i] = 1;
    r.len2 = rs.simple_len2[i];
    seen.insert(r.simple);
    rs.positive.push_back(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      const Coord c = r.fw[i];
      if (c == 0) continue;
      Root s;
      s.fw = rs.reflect(r.fw, i);
      s.simple = r.simple;
      s.simple[i] -= c;
      s.len2 = r.len2;  // reflections preserve length
      const bool positive =
          std::all_of(s.simple.begin(), s.simple.end(),
                      [](Coord x) { return x >= 0; }) &&
          std::any_of(s.simple.begin(), s.simple.end(),
                      [](Coord x) { return x > 0; });
      if (!positive) continue;
      if (seen.insert(s.simple).second) {
        rs.positive.push_back(s);
        queue.push_back(s);
      }
    }
  }
  std::sort(rs.positive.begin() + rank, rs.positive.end(),
            [](const Root& a, const Root& b) {
              const Coord ha = std::accumulate(a.simple.begin(), a.simple.end(),
                                               Coord{0});
              const Coord hb = std::accumulate(b.simple.begin(), b.simple.end(),
                                               Coord{0});
              if (ha != hb) return ha < hb;
              return a.simple < b.simple;
            });
  return rs;
}

Weight weyl_apply(const RootSystem& rs, const WeylElement& w, Weight lambda) {
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
    lambda = rs.reflect(lambda, *it);
  return lambda;
}

Weight root_reflect(const RootSystem& rs, const Root& gamma, Weight lambda) {
  const Coord c = rs.pair_coroot(lambda, gamma);
  for (int i = 0; i < rs.rank; ++i) lambda[i] -= c * gamma.fw[i];
  return lambda;
}

int weyl_length(const RootSystem& rs, const WeylElement& w) {
  // l(w) = #{gamma > 0 : w(gamma) < 0}.  Track each positive root's
  // simple-root expansion through the word so positivity is immediate.
  int inv = 0;
  for (const Root& g : rs.positive) {
    Weight fw = g.fw;
    std::vector<Coord> exp = g.simple;
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
      const int i = *it;
      const Coord c = fw[i];
      fw = rs.reflect(fw, i);
      exp[i] -= c;
    }
    const bool neg = std::all_of(exp.begin(), exp.end(),
                                 [](Coord x) { return x <= 0; });
    if (neg) ++inv;
  }
  return inv;
}

int weyl_length_times_reflection(const RootSystem& rs, const WeylElement& w,
                                 const Root& gamma) {
  int inv = 0;
  for (const Root& g : rs.positive) {
    // Apply s_gamma first, then w, tracking the simple-root expansion.
    const Coord c = rs.pair_coroot(g.fw, gamma);
    Weight fw = g.fw;
    std::vector<Coord> exp = g.simple;
    for (int i = 0; i < rs.rank; ++i) {
      fw[i] -= c * gamma.fw[i];
      exp[i] -= c * gamma.simple[i];
    }
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
      const int i = *it;
      const Coord ci = fw[i];
      fw = rs.reflect(fw, i);
      exp[i] -= ci;
    }
    const bool neg = std::all_of(exp.begin(), exp.end(),
                                 [](Coord x) { return x <= 0; });
    if (neg) ++inv;
  }
  return inv;
}

WeylElement longest_element(const RootSystem& rs,
                            const std::vector<int>& gens) {
  // Greedy ascent by right multiplication: w s_i is longer than w exactly
  // when w(alpha_i) is a positive root; append any such generator until none
  // remains, which ends at the longest element of the parabolic subgroup.
  WeylElement w;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i : gens) {
      // w(alpha_i) positive <=> l(w s_i) = l(w) + 1.
      std::vector<Coord> exp(rs.rank, 0);
      exp[i] = 1;
      Weight fw = rs.simple_root(i);
      for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
        const int j = *it;
        const Coord c = fw[j];
        fw = rs.reflect(fw, j);
        exp[j] -= c;
      }
      const bool pos = std::all_of(exp.begin(), exp.end(),
                                   [](Coord x) { return x >= 0; });
      if (pos) {
        w.word.push_back(i);
        progress = true;
      }
    }
  }
  return w;
}

int CosetPoset::index_of_weight(const Weight& weight) const {
  auto it = weight_index_.find(weight);
  return it == weight_index_.end() ? -1 : it->second;
}

int CosetPoset::index_of(const WeylElement& w) const {
  return index_of_weight(weyl_apply(*rs, w, seed));
}

int CosetPoset::dual(int i) const {
  Weight neg = rep_weights[i];
  for (auto& c : neg) c = -c;
  const int d = index_of_weight(neg);
  assert(d >= 0);
  return d;
}

std::vector<int> CosetPoset::length_histogram() const {
  std::vector<int> h(max_length + 1, 0);
  for (int l : lengths) ++h[l];
  return h;
}

CosetPoset coset_poset(const RootSystem& rs, const std::vector<int>& parabolic,
                       bool with_covers) {
  CosetPoset p;
  p.rs = &rs;
  p.parabolic = parabolic;
  std::vector<bool> in_par(rs.rank, false);
  for (int i : parabolic) in_par[i] = true;
  p.seed.assign(rs.rank, 0);
  for (int i = 0; i < rs.rank; ++i)
    if (!in_par[i]) p.seed[i] = 1;

  // BFS over the orbit of the seed; the BFS level is the quotient length.
  p.reps.push_back(WeylElement{});
  p.rep_weights.push_back(p.seed);
  p.lengths.push_back(0);
  p.weight_index_[p.seed] = 0;
  for (std::size_t head = 0; head < p.reps.size(); ++head) {
    const Weight cur = p.rep_weights[head];
    for (int i = 0; i < rs.rank; ++i) {
      if (cur[i] <= 0) continue;  // s_i lengthens the rep iff <cur,a_i^vee>>0
      Weight nxt = rs.reflect(cur, i);
      if (p.weight_index_.count(nxt)) continue;
      WeylElement w;
      w.word.push_back(i);
      w.word.insert(w.word.end(), p.reps[head].word.begin(),
                    p.reps[head].word.end());
      // nxt = s_i(cur) means the new rep is s_i * old as maps... careful:
      // new weight must equal new_rep(seed); s_i applied after old rep.
      p.weight_index_[nxt] = static_cast<int>(p.reps.size());
      p.reps.push_back(std::move(w));
      p.rep_weights.push_back(std::move(nxt));
      p.lengths.push_back(p.lengths[head] + 1);
    }
  }
  p.max_length = p.lengths.back();

  // Chevalley weight: defined when exactly one node is removed.
  int removed = -1;
  int removed_count = 0;
  for (int i = 0; i < rs.rank; ++i)
    if (!in_par[i]) {
      removed = i;
      ++removed_count;
    }
  Weight omega(rs.rank, 0);
  if (removed_count == 1) omega[removed] = 1;

  // Bruhat covers inside W^P with the reflection root attached.  The
  // candidate loop is quadratic in the orbit size, so instead of replaying
  // each Weyl word per positive root we precompute, per representative u,
  // its matrices in the fundamental-weight and simple-root bases, and per
  // reflection s_gamma the images of all positive roots; every candidate
  // then costs a few small matrix-vector products.
  p.covers.assign(p.size(), {});
  if (with_covers) {
    const int np = rs.num_positive();
    std::vector<int> ext_roots;  // gamma outside Phi_P
    for (int gi = 0; gi < np; ++gi) {
      const Root& gamma = rs.positive[gi];
      bool in_levi = true;
      for (int i = 0; i < rs.rank && in_levi; ++i)
        if (gamma.simple[i] != 0 && !in_par[i]) in_levi = false;
      if (!in_levi) ext_roots.push_back(gi);
    }
    // s_gamma(seed) in fundamental-weight coordinates.
    std::vector<Weight> gamma_seed(np);
    // s_gamma(g) in simple-root coordinates, for every positive root g.
    std::vector<std::vector<std::vector<Coord>>> sg_exp(np);
    for (int gi : ext_roots) {
      const Root& gamma = rs.positive[gi];
      gamma_seed[gi] = root_reflect(rs, gamma, p.seed);
      sg_exp[gi].resize(np);
      for (int g = 0; g < np; ++g) {
        const Coord c = rs.pair_coroot(rs.positive[g].fw, gamma);
        std::vector<Coord> e = rs.positive[g].simple;
        for (int i = 0; i < rs.rank; ++i) e[i] -= c * gamma.simple[i];
        sg_exp[gi][g] = std::move(e);
      }
    }
    for (int ui = 0; ui < p.size(); ++ui) {
      const WeylElement& u = p.reps[ui];
      // Column j of F: u(omega_j) in fundamental-weight coordinates.
      // Column j of S: u(alpha_j) in simple-root coordinates.
      std::vector<Weight> F(rs.rank);
      std::vector<std::vector<Coord>> S(rs.rank);
      for (int j = 0; j < rs.rank; ++j) {
        Weight wt(rs.rank, 0);
        wt[j] = 1;
        for (auto it = u.word.rbegin(); it != u.word.rend(); ++it)
          wt = rs.reflect(wt, *it);
        F[j] = std::move(wt);
        std::vector<Coord> exp(rs.rank, 0);
        exp[j] = 1;
        Weight fw = rs.simple_root(j);
        for (auto it = u.word.rbegin(); it != u.word.rend(); ++it) {
          const int i = *it;
          const Coord c = fw[i];
          fw = rs.reflect(fw, i);
          exp[i] -= c;
        }
        S[j] = std::move(exp);
      }
      for (int gi : ext_roots) {
        const Root& gamma = rs.positive[gi];
        // Candidate cover u * s_gamma: locate its coset, require quotient
        // length +1 and full length +1 (then it is its own minimal rep).
        Weight key(rs.rank, 0);
        for (int j = 0; j < rs.rank; ++j) {
          const Coord c = gamma_seed[gi][j];
          if (c == 0) continue;
          for (int i = 0; i < rs.rank; ++i) key[i] += c * F[j][i];
        }
        const int vi = p.index_of_weight(key);
        assert(vi >= 0);
        if (p.lengths[vi] != p.lengths[ui] + 1) continue;
        // l(u s_gamma) = number of positive roots g with u(s_gamma(g)) < 0.
        // The image is a root, so its simple expansion has uniform sign and
        // the first nonzero coordinate decides.
        int len = 0;
        for (int g = 0; g < np; ++g) {
          const std::vector<Coord>& e = sg_exp[gi][g];
          for (int i = 0; i < rs.rank; ++i) {
            Coord s = 0;
            for (int j = 0; j < rs.rank; ++j) s += S[j][i] * e[j];
            if (s != 0) {
              if (s < 0) ++len;
              break;
            }
          }
          if (len > p.lengths[ui] + 1) break;
        }
        if (len != p.lengths[ui] + 1) continue;
        Coord coeff = 0;
        if (removed_count == 1) coeff = rs.pair_coroot(omega, gamma);
        p.covers[ui].push_back({vi, gi, coeff});
      }
    }
  }
  return p;
}

Coord fano_index(const RootSystem& rs, const CosetPoset& poset) {
  std::vector<bool> in_par(rs.rank, false);
  for (int i : poset.parabolic) in_par[i] = true;
  int removed = -1;
  for (int i = 0; i < rs.rank; ++i)
    if (!in_par[i]) {
      if (removed >= 0) throw std::invalid_argument("parabolic not maximal");
      removed = i;
    }
  Weight sum(rs.rank, 0);
  for (const Root& g : rs.positive) {
    bool in_levi = true;
    for (int i = 0; i < rs.rank && in_levi; ++i)
      if (g.simple[i] != 0 && !in_par[i]) in_levi = false;
    if (in_levi) continue;
    for (int i = 0; i < rs.rank; ++i) sum[i] += g.fw[i];
  }
  return sum[removed];
}

namespace {

// Maximal-length representative in W^{P cap Q} of the coset w W_P, where w is
// already a minimal representative of w W_P: w * w0(P) * w0(P cap Q).
WeylElement max_double_coset_rep(const RootSystem& rs, const WeylElement& w,
                                 const std::vector<int>& par_from,
                                 const std::vector<int>& par_both) {
  const WeylElement w0p = longest_element(rs, par_from);
  const WeylElement w0pq = longest_element(rs, par_both);
  WeylElement out;
  out.word = w.word;
  out.word.insert(out.word.end(), w0p.word.begin(), w0p.word.end());
  out.word.insert(out.word.end(), w0pq.word.begin(), w0pq.word.end());
  return out;
}

std::vector<int> intersect_parabolics(const std::vector<int>& a,
                                      const std::vector<int>& b) {
  std::vector<int> out;
  for (int i : a)
    if (std::find(b.begin(), b.end(), i) != b.end()) out.push_back(i);
  return out;
}

}  // namespace

HatImage hat_image(const RootSystem& rs, const CosetPoset& from,
                   const CosetPoset& to, int codim_drop_offset, int u) {
  // Work in the dimension convention: the cycle is the Schubert variety of
  // the dual representative; saturate its coset under W_{P_from}, push to the
  // target quotient, and convert back to the codimension convention.
  const WeylElement& wdim = from.reps[from.dual(u)];
  const WeylElement wmax = max_double_coset_rep(
      rs, wdim, from.parabolic,
      intersect_parabolics(from.parabolic, to.parabolic));
  const int vdim = to.index_of(wmax);
  HatImage h;
  h.v = to.dual(vdim);
  h.drop = to.lengths[h.v] - (from.lengths[u] + 1 - codim_drop_offset);
  return h;
}

int tilde_lift(const RootSystem& rs, const CosetPoset& from,
               const CosetPoset& both, int u) {
  // W^{P_from} is contained in W^{P_both}, and the preimage of the Schubert
  // variety of u under the projection G/(P_both) -> G/(P_from) is the
  // Schubert variety of the same Weyl element in the finer quotient.
  (void)rs;
  return both.index_of(from.reps[u]);
}

}  // namespace qh
