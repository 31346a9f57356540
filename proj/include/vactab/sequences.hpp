#pragma once

#include <string>
#include <vector>

#include "vactab/arith.hpp"

namespace vactab {

// The eight counting sequences, indexed from k = 0. The *_half names hold
// the odd-length analogs: name_half[k] counts walks of length 2k+1.
enum class SeqName { g, g_half, a, a_half, u, u_half, v, v_half };

SeqName seq_from_tag(const std::string& tag);  // "g", "g-half", ... ; throws on unknown
std::string seq_tag(SeqName name);
std::string seq_oeis_label(SeqName name);  // informational; "n/a" when absent

struct SequenceTable {
  SeqName name;
  std::vector<Int> terms;
};

// Terms k = 0..count-1 from the closed summation formulas (count <= 30).
SequenceTable generate_sequence(SeqName name, int count);

struct RelationReport {
  std::string id;
  bool pass = true;
  int first_failure_k = -1;
  std::string lhs, rhs;  // populated at the first counterexample
};

// Term relations between the sequences. Known ids: thm7.1, thm6.5, rec-2k,
// bt-g, bt-u, bt-a (Thm 6.4), bt-v, conv-g-a, conv-ghalf-ahalf, conv-u-v,
// conv-uhalf-vhalf.
RelationReport check_relation(const std::string& relation_id, int max_k);

// Formula terms against brute-force family cardinalities.
RelationReport check_against_enumeration(SeqName name, int max_k);

}  // namespace vactab
