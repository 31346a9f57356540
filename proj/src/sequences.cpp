#include "vactab/sequences.hpp"

#include <functional>
#include <stdexcept>

#include "vactab/setpart.hpp"

namespace vactab {

SeqName seq_from_tag(const std::string& tag) {
  std::string t = tag;
  for (auto& c : t)
    if (c == '_') c = '-';
  if (t == "g") return SeqName::g;
  if (t == "g-half") return SeqName::g_half;
  if (t == "a") return SeqName::a;
  if (t == "a-half") return SeqName::a_half;
  if (t == "u") return SeqName::u;
  if (t == "u-half") return SeqName::u_half;
  if (t == "v") return SeqName::v;
  if (t == "v-half") return SeqName::v_half;
  throw std::invalid_argument("unknown sequence: " + tag);
}

std::string seq_tag(SeqName name) {
  switch (name) {
    case SeqName::g: return "g";
    case SeqName::g_half: return "g-half";
    case SeqName::a: return "a";
    case SeqName::a_half: return "a-half";
    case SeqName::u: return "u";
    case SeqName::u_half: return "u-half";
    case SeqName::v: return "v";
    case SeqName::v_half: return "v-half";
  }
  throw std::logic_error("unreachable");
}

std::string seq_oeis_label(SeqName name) {
  switch (name) {
    case SeqName::g: return "A002872";
    case SeqName::g_half: return "A080337";
    case SeqName::a: return "A004211";
    case SeqName::a_half: return "A007405";
    case SeqName::u: return "A059099";
    case SeqName::u_half: return "n/a";
    case SeqName::v: return "A000670";
    case SeqName::v_half: return "A000629";
  }
  throw std::logic_error("unreachable");
}

namespace {

Int term(SeqName name, int k) {
  Int s = 0;
  switch (name) {
    case SeqName::g:
      for (int j = 0; j <= k; ++j) s += marked_count(k, j) * involutions(j);
      return s;
    case SeqName::g_half:
      for (int j = 0; j <= k; ++j) s += tilde_marked_count(k + 1, j) * involutions(j);
      return s;
    case SeqName::a:
      for (int j = 0; j <= k; ++j) s += stirling2(k, j) * involutions(j);
      return s;
    case SeqName::a_half:
      for (int j = 0; j <= k; ++j) s += stirling2(k + 1, j + 1) * involutions(j);
      return s;
    case SeqName::u:
      for (int j = 0; j <= k; ++j) s += factorial(j) * marked_count(k, j);
      return s;
    case SeqName::u_half:
      for (int j = 0; j <= k; ++j) s += factorial(j) * tilde_marked_count(k + 1, j);
      return s;
    case SeqName::v:
      return fubini(k);
    case SeqName::v_half:
      for (int j = 0; j <= k; ++j) s += factorial(j) * stirling2(k + 1, j + 1);
      return s;
  }
  throw std::logic_error("unreachable");
}

}  // namespace

SequenceTable generate_sequence(SeqName name, int count) {
  if (count < 0 || count > 30)
    throw std::invalid_argument("generate_sequence: count must be in 0..30");
  SequenceTable out{name, {}};
  out.terms.reserve(count);
  for (int k = 0; k < count; ++k) out.terms.push_back(term(name, k));
  return out;
}

namespace {

RelationReport check_terms(const std::string& id, int max_k,
                           const std::function<Int(int)>& lhs,
                           const std::function<Int(int)>& rhs) {
  RelationReport rep;
  rep.id = id;
  for (int k = 0; k <= max_k; ++k) {
    const Int l = lhs(k), r = rhs(k);
    if (l != r) {
      rep.pass = false;
      rep.first_failure_k = k;
      rep.lhs = to_string(l);
      rep.rhs = to_string(r);
      return rep;
    }
  }
  return rep;
}

Int bell_convolution(SeqName base, int k) {
  Int s = 0;
  for (int j = 0; j <= k; ++j) s += binomial(k, j) * bell(j) * term(base, k - j);
  return s;
}

Int transform(SeqName base, int k) {
  Int s = 0;
  for (int j = 0; j <= k; ++j) s += binomial(k, j) * term(base, j);
  return s;
}

}  // namespace

RelationReport check_relation(const std::string& relation_id, int max_k) {
  using enum SeqName;
  if (relation_id == "thm7.1" || relation_id == "conv-g-a")
    return check_terms(relation_id, max_k, [](int k) { return term(g, k); },
                       [](int k) { return bell_convolution(a, k); });
  if (relation_id == "conv-ghalf-ahalf")
    return check_terms(relation_id, max_k, [](int k) { return term(g_half, k); },
                       [](int k) { return bell_convolution(a_half, k); });
  if (relation_id == "conv-u-v")
    return check_terms(relation_id, max_k, [](int k) { return term(u, k); },
                       [](int k) { return bell_convolution(v, k); });
  if (relation_id == "conv-uhalf-vhalf")
    return check_terms(relation_id, max_k, [](int k) { return term(u_half, k); },
                       [](int k) { return bell_convolution(v_half, k); });
  if (relation_id == "bt-g")
    return check_terms(relation_id, max_k, [](int k) { return term(g_half, k); },
                       [](int k) { return transform(g, k); });
  if (relation_id == "bt-u")
    return check_terms(relation_id, max_k, [](int k) { return term(u_half, k); },
                       [](int k) { return transform(u, k); });
  if (relation_id == "bt-a" || relation_id == "thm6.4")
    return check_terms(relation_id, max_k, [](int k) { return term(a_half, k); },
                       [](int k) { return transform(a, k); });
  if (relation_id == "bt-v")
    return check_terms(relation_id, max_k, [](int k) { return term(v_half, k); },
                       [](int k) { return transform(v, k); });
  if (relation_id == "thm6.5")
    return check_terms(relation_id, max_k, [](int k) { return term(a, k + 1); },
                       [](int k) { return transform(a_half, k); });
  if (relation_id == "rec-2k")
    return check_terms(relation_id, max_k, [](int k) { return term(a, k + 1); },
                       [](int k) {
                         Int s = 0;
                         for (int j = 0; j <= k; ++j)
                           s += binomial(k, j) * int_pow(Int(2), k - j) * term(a, j);
                         return s;
                       });
  throw std::invalid_argument("unknown relation: " + relation_id);
}

RelationReport check_against_enumeration(SeqName name, int max_k) {
  using enum SeqName;
  const std::string id = seq_tag(name) + "-enumeration";
  switch (name) {
    case g:
      return check_terms(id, max_k, [](int k) { return term(g, k); },
                         [](int k) {
                           return k == 0 ? Int(1)
                                         : Int(enumerate_symmetric(k, false).size());
                         });
    case g_half:
      return check_terms(id, max_k, [](int k) { return term(g_half, k); },
                         [](int k) { return Int(enumerate_symmetric(k, true).size()); });
    case a:
      // symmetric (k,k)-connecting partitions of [2k]
      return check_terms(id, max_k, [](int k) { return term(a, k); },
                         [](int k) {
                           if (k == 0) return Int(1);
                           Int n = 0;
                           for (const auto& p : enumerate_connecting(k, k)) {
                             bool sym = true;
                             for (const auto& blk : p.blocks()) {
                               std::vector<int> mirror;
                               for (auto it = blk.rbegin(); it != blk.rend(); ++it)
                                 mirror.push_back(2 * k + 1 - *it);
                               bool found = false;
                               for (const auto& other : p.blocks())
                                 found = found || other == mirror;
                               sym = sym && found;
                             }
                             if (sym) ++n;
                           }
                           return n;
                         });
    case a_half:
      return check_terms(id, max_k, [](int k) { return term(a_half, k); },
                         [](int k) { return Int(enumerate_type_b(k).size()); });
    case u:
      return check_terms(id, max_k, [](int k) { return term(u, k); },
                         [](int k) { return count_partly_ordered(k); });
    case u_half:
      return check_terms(id, max_k, [](int k) { return term(u_half, k); },
                         [](int k) { return count_partly_ordered_tilde(k + 1); });
    case v:
      return check_terms(id, max_k, [](int k) { return term(v, k); },
                         [](int k) { return count_ordered(k); });
    case v_half:
      return check_terms(id, max_k, [](int k) { return term(v_half, k); },
                         [](int k) { return count_cyclically_ordered(k + 1); });
  }
  throw std::logic_error("unreachable");
}

}  // namespace vactab
