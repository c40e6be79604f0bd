// Definition-file sessions: parsing, named bindings, command execution.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "doublekit/complexes.hpp"
#include "doublekit/relative.hpp"

namespace doublekit {

// Canonical declaration text, shared by session printing and by the
// verifier's replay files.
std::string print_ring_decl(const std::string& name, const PolyRing& ring);
std::string print_module_decl(const std::string& name,
                              const std::string& ring_name,
                              const Submodule& m);
std::string print_hom_decl(const std::string& name,
                           const std::string& domain_name,
                           const std::string& codomain_name,
                           const MatrixHom& hom);
std::string print_germ_decl(const std::string& name,
                            const std::string& source_name,
                            const std::string& target_name,
                            const RingMorphism& pullback,
                            const DoubleContext& target_context);

struct SourcePos {
  unsigned line = 0;
  unsigned col = 0;
};

// Parse/execution failure with the position of the offending statement.
class ParseError : public Error {
public:
  ParseError(SourcePos where, const std::string& message);
  SourcePos where;
};

enum class BindingKind {
  Ring,
  Module,
  Hom,
  Complex,
  Germ,
  ChainMapBinding,
  DegreeOneBinding,
  RelHom,
};

// One named value.  Only the fields for its kind are meaningful; the name
// lists alongside hold the binding names needed to reprint the declaration.
struct Binding {
  BindingKind kind = BindingKind::Ring;

  PolyRing ring;

  Submodule module;
  std::string ring_name;

  MatrixHom hom;
  std::string dom_name;
  std::string cod_name;

  ChainComplex complex;
  std::vector<std::string> part_names;  // modules (complex) or components
  std::vector<std::string> diff_names;  // complex differentials

  ChainMap chain_map;
  DegreeOneMap degree_map;
  std::string src_name;
  std::string dst_name;

  RelativeMap germ;

  GeneratorImageHom rel_hom;
  std::string germ_name;
};

class Session {
public:
  bool has(const std::string& name) const;
  const Binding& get(const std::string& name) const;  // throws on unknown
  void bind(const std::string& name, Binding value);  // throws on duplicate
  const std::vector<std::string>& order() const { return order_; }

private:
  std::vector<std::string> order_;
  std::map<std::string, Binding> entries_;
};

// Parses declarations AND executes commands statement by statement; command
// output is discarded (use run_session_text to keep it).
Session parse_session(const std::string& text);

// All bindings as declarations, in binding order — reparses to an equal
// session (equality = identical printed form).
std::string print_session(const Session& session);

// Parses and executes one statement against the session; returns the
// command's printed output (empty for declarations).
std::string exec_command(Session& session, const std::string& command);

struct SessionResult {
  std::string output;  // concatenated command output
  std::string error;   // empty on success
  int exit_code = 0;   // 0 iff no error and no property failures
};

SessionResult run_session_text(const std::string& text,
                               const std::string& include_dir = "");
SessionResult run_session_file(const std::string& path);

}  // namespace doublekit
