#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "infinireg/bloch/bloch.hpp"
#include "infinireg/cech/cech.hpp"
#include "infinireg/squarezero/hom.hpp"
#include "infinireg/squarezero/splitting.hpp"

namespace infinireg {

enum class ValueKind { Ring, Elem, Splitting, Hom, Bloch, InfBloch, FWedge, Cech };

std::string_view value_kind_name(ValueKind k);

struct SourcePos {
  int line = 1;
  int column = 1;
};

/// One `cmd` statement: positional words and `--flag value` options.
struct CommandRecord {
  std::string name;
  std::vector<std::string> args;
  std::map<std::string, std::string> options;
  SourcePos pos;
};

struct NamedSplitting {
  std::string ring;
  Splitting value;
};

struct NamedHom {
  std::string source;
  std::string target;
  AlgebraHom value;
};

struct CechBlock {
  CoverSetup cover;
  CechDatum data;
};

/// Definitions evaluated in order plus the dispatch records of `cmd`
/// statements. Elements, sums and cech blocks live in the primary (first
/// declared) ring; splittings and hom targets may name another ring.
struct CommandScript {
  std::string primary;
  std::map<std::string, RingSpec> rings;
  std::map<std::string, ValueKind> kinds;
  std::map<std::string, SqZeroElement> elems;
  std::map<std::string, NamedSplitting> splittings;
  std::map<std::string, NamedHom> homs;
  std::map<std::string, BlochSum> blochs;
  std::map<std::string, InfBlochSum> infblochs;
  std::map<std::string, FWedgeSum> fwedges;
  std::map<std::string, CechBlock> cechs;
  std::vector<std::string> cech_order;
  std::vector<CommandRecord> commands;

  const RingSpec& ring() const { return rings.at(primary); }
  // Built-ins: tau0 is the zero splitting of the requested ring, id the
  // identity of the primary ring.
  NamedSplitting splitting(const std::string& name, const std::string& ring) const;
  NamedHom hom(const std::string& name) const;
};

// Errors: PARSE_ERROR, NAME_CLASH, UNKNOWN_IDENT, each with line:column;
// evaluation errors keep their code and gain the position.
CommandScript parse_script(std::string_view text);
CommandScript parse_script_file(const std::string& path);

/// Runs one command; false when a check it performs fails. Evaluation
/// errors propagate.
bool execute_command(const CommandScript& script, const CommandRecord& cmd, std::ostream& out);

/// Runs every command in order; exit status 0 when all pass, 1 otherwise.
/// A command that throws is reported and counts as a failure.
int run_script(const CommandScript& script, std::ostream& out);

}  // namespace infinireg
