#ifndef HOPFQ_IO_HPP
#define HOPFQ_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "hopfq/loops.hpp"

namespace hopfq {

/// A named module attached to a structure file, as raw sparse tensors.
///   action entry  (a, i, b, v):  e_a . e_i       += v e_b
///   coaction entry (a, b, i, v): coaction(e_a)   += v e_b (x) e_i
struct ModuleEntry {
  std::string name;
  std::size_t dim = 0;
  LinMap action;    // [m,n] -> [m]
  LinMap coaction;  // [m] -> [m,n]
};

/// In-memory form of a structure file: the raw tensors plus attached
/// modules. Parsing performs no axiom validation; callers build from it.
struct StructureDocument {
  RawStructure structure;
  std::vector<ModuleEntry> modules;
};

/// Line-oriented text format. Sections:
///   format_version 1
///   field QQ | field GF <p>
///   dim <n>
///   begin mu / delta / unit / counit / antipode ... end <section>
///   begin module <name> ... end module
/// Omitted entries are zero; duplicate entries are an error.
/// mu lines are "i j k v" (e_i e_j += v e_k); delta lines are "i j k v"
/// (coproduct(e_i) += v e_j (x) e_k); antipode lines are "i j v"
/// (S(e_j) += v e_i); unit/counit lines are "i v".
StructureDocument parse_structure(std::istream& in);
StructureDocument parse_structure_file(const std::string& path);

/// Deterministic rendering: sorted entries, canonical literals. Parsing the
/// result reproduces the document exactly.
std::string render_structure(const StructureDocument& doc);

/// Loop table text: "order identity_index" then `order` rows of indices.
/// Lines starting with '#' are comments.
LoopTable parse_loop_table(std::istream& in);
LoopTable parse_loop_table_file(const std::string& path);
std::string render_loop_table(const LoopTable& t);

}  // namespace hopfq

#endif
