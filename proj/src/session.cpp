#include "doublekit/session.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "doublekit/verifier.hpp"

namespace doublekit {

// ------------------------------------------------------------- printers

namespace {

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string print_ring_decl(const std::string& name, const PolyRing& ring) {
  return "ring " + name + " vars " + join(ring.vars(), " ") + ";\n";
}

std::string print_module_decl(const std::string& name,
                              const std::string& ring_name,
                              const Submodule& m) {
  std::vector<std::string> gens;
  for (const auto& g : m.generators()) gens.push_back(g.to_string());
  return "module " + name + " in " + ring_name + "^" +
         std::to_string(m.rank()) + " gens [" + join(gens, ", ") + "];\n";
}

std::string print_hom_decl(const std::string& name,
                           const std::string& domain_name,
                           const std::string& codomain_name,
                           const MatrixHom& hom) {
  return "hom " + name + " : " + domain_name + " -> " + codomain_name +
         " matrix " + hom.matrix_to_string() + ";\n";
}

std::string print_germ_decl(const std::string& name,
                            const std::string& source_name,
                            const std::string& target_name,
                            const RingMorphism& pullback,
                            const DoubleContext& target_context) {
  std::vector<std::string> sends;
  for (const auto& p : pullback.images()) sends.push_back(p.to_string());
  return "germ " + name + " : " + source_name + " -> " + target_name +
         " sends [" + join(sends, ", ") + "] doubled [" +
         join(target_context.doubled().vars(), ", ") + "];\n";
}

// -------------------------------------------------------------- session

ParseError::ParseError(SourcePos w, const std::string& message)
    : Error(message), where(w) {}

bool Session::has(const std::string& name) const {
  return entries_.count(name) > 0;
}

const Binding& Session::get(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw Error("unknown name: " + name);
  return it->second;
}

void Session::bind(const std::string& name, Binding value) {
  if (entries_.count(name)) throw Error("name already bound: " + name);
  entries_.emplace(name, std::move(value));
  order_.push_back(name);
}

// ---------------------------------------------------------------- lexer

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Lexer {
  const std::string& src;
  std::size_t pos = 0;
  unsigned line = 1;
  unsigned col = 1;

  explicit Lexer(const std::string& text) : src(text) {}

  bool raw_end() const { return pos >= src.size(); }
  char raw_peek() const { return raw_end() ? '\0' : src[pos]; }

  void advance() {
    if (raw_end()) return;
    if (src[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_ws() {
    while (!raw_end()) {
      char c = src[pos];
      if (c == '#') {
        while (!raw_end() && src[pos] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_ws();
    return raw_end();
  }

  SourcePos here() {
    skip_ws();
    return {line, col};
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError({line, col}, msg);
  }

  char peek_char() {
    skip_ws();
    return raw_peek();
  }

  std::string read_ident(const std::string& what) {
    skip_ws();
    if (raw_end() || !ident_start(raw_peek()))
      fail("expected " + what);
    std::string out;
    while (!raw_end() && ident_char(raw_peek())) {
      out += raw_peek();
      advance();
    }
    return out;
  }

  void expect_keyword(const std::string& kw) {
    std::string got = read_ident("'" + kw + "'");
    if (got != kw) fail("expected '" + kw + "', got '" + got + "'");
  }

  unsigned long read_number(const std::string& what) {
    skip_ws();
    if (raw_end() || !std::isdigit(static_cast<unsigned char>(raw_peek())))
      fail("expected " + what);
    std::string digits;
    while (!raw_end() && std::isdigit(static_cast<unsigned char>(raw_peek()))) {
      digits += raw_peek();
      advance();
    }
    return std::stoul(digits);
  }

  void expect(char c) {
    skip_ws();
    if (raw_peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  bool try_consume(char c) {
    skip_ws();
    if (raw_peek() != c) return false;
    advance();
    return true;
  }

  void expect_arrow() {
    skip_ws();
    if (raw_peek() != '-') fail("expected '->'");
    advance();
    if (raw_peek() != '>') fail("expected '->'");
    advance();
  }

  std::string read_string() {
    skip_ws();
    if (raw_peek() != '"') fail("expected a quoted path");
    advance();
    std::string out;
    while (!raw_end() && raw_peek() != '"') {
      out += raw_peek();
      advance();
    }
    if (raw_end()) fail("unterminated string");
    advance();
    return out;
  }

  // Raw text of one balanced bracket group, delimiters included.
  std::string capture_balanced(char open, char close) {
    skip_ws();
    if (raw_peek() != open) fail(std::string("expected '") + open + "'");
    std::size_t start = pos;
    int depth = 0;
    while (!raw_end()) {
      char c = raw_peek();
      if (c == open) ++depth;
      if (c == close) --depth;
      advance();
      if (depth == 0) return src.substr(start, pos - start);
    }
    fail(std::string("unbalanced '") + open + "'");
  }

  // Whitespace-delimited word for the verify statement; second value is
  // true when the terminating ';' was consumed.
  std::pair<std::string, bool> read_word() {
    skip_ws();
    if (raw_end()) fail("expected ';'");
    if (raw_peek() == ';') {
      advance();
      return {"", true};
    }
    std::string out;
    while (!raw_end() && !std::isspace(static_cast<unsigned char>(raw_peek())) &&
           raw_peek() != ';')
      out += raw_peek(), advance();
    bool ended = false;
    skip_ws();
    if (raw_peek() == ';') {
      advance();
      ended = true;
    }
    return {out, ended};
  }
};

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Splits the interior of a bracket group on top-level commas.
std::vector<std::string> split_top(const std::string& raw) {
  std::string inner = trim(raw);
  if (inner.size() < 2) throw Error("malformed bracket group: " + raw);
  inner = inner.substr(1, inner.size() - 2);
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : inner) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty()) parts.push_back(trim(cur));
  for (const auto& p : parts)
    if (p.empty()) throw Error("empty entry in list: " + raw);
  return parts;
}

// ----------------------------------------------------------- execution

struct Exec {
  Session* session = nullptr;
  std::string base_dir;
  std::string replay_dir = ".";
  int depth = 0;
  bool property_failure = false;
  std::string output;
};

void exec_text(Exec& ex, const std::string& text);

const Binding& get_kind(const Exec& ex, const std::string& name,
                        BindingKind kind, const std::string& what) {
  const Binding& b = ex.session->get(name);
  if (b.kind != kind) throw Error(name + " is not a " + what);
  return b;
}

bool bindings_equal(const Binding& a, const Binding& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case BindingKind::Ring:
      return a.ring == b.ring;
    case BindingKind::Module:
      return a.module.ring() == b.module.ring() &&
             a.module.rank() == b.module.rank() && a.module == b.module;
    case BindingKind::Hom:
      return a.hom.domain() == b.hom.domain() &&
             a.hom.codomain() == b.hom.codomain() &&
             hom_eq_on_domain(a.hom, b.hom);
    case BindingKind::Complex: {
      const ChainComplex& c = a.complex;
      const ChainComplex& d = b.complex;
      if (c.top_degree() != d.top_degree() || c.length() != d.length())
        return false;
      for (std::size_t k = 0; k < c.length(); ++k)
        if (c.modules()[k] != d.modules()[k]) return false;
      for (std::size_t k = 0; k < c.diffs().size(); ++k)
        if (!hom_eq_on_domain(c.diffs()[k], d.diffs()[k])) return false;
      return true;
    }
    default:
      return false;
  }
}

// Derived names (from the double command) may recur; an exact re-creation
// is reused silently, anything else is a clash.
void bind_derived(Exec& ex, const std::string& name, Binding value) {
  if (ex.session->has(name)) {
    if (!bindings_equal(ex.session->get(name), value))
      throw Error("name already bound to a different value: " + name);
    return;
  }
  ex.session->bind(name, std::move(value));
}

// ------------------------------------------------------- declarations

void stmt_ring(Exec& ex, Lexer& lx) {
  std::string name = lx.read_ident("ring name");
  lx.expect_keyword("vars");
  std::vector<std::string> vars;
  while (lx.peek_char() != ';') vars.push_back(lx.read_ident("variable name"));
  lx.expect(';');
  if (vars.empty()) throw Error("a ring needs at least one variable");
  Binding b;
  b.kind = BindingKind::Ring;
  b.ring = PolyRing(std::move(vars));
  ex.session->bind(name, std::move(b));
}

void stmt_module(Exec& ex, Lexer& lx) {
  std::string name = lx.read_ident("module name");
  lx.expect_keyword("in");
  std::string ring_name = lx.read_ident("ring name");
  lx.expect('^');
  unsigned long rank = lx.read_number("ambient rank");
  lx.expect_keyword("gens");
  std::string raw = lx.capture_balanced('[', ']');
  lx.expect(';');
  const Binding& rb = get_kind(ex, ring_name, BindingKind::Ring, "ring");
  if (rank == 0) throw Error("ambient rank must be positive");
  std::vector<ModuleElement> gens;
  for (const auto& piece : split_top(raw)) {
    ModuleElement g = ModuleElement::parse(rb.ring, piece);
    if (g.rank() != rank)
      throw Error("generator " + piece + " does not have rank " +
                  std::to_string(rank));
    gens.push_back(std::move(g));
  }
  Binding b;
  b.kind = BindingKind::Module;
  b.module = Submodule(rb.ring, rank, std::move(gens));
  b.ring_name = ring_name;
  ex.session->bind(name, std::move(b));
}

std::vector<std::vector<Polynomial>> parse_matrix(const PolyRing& ring,
                                                  const std::string& raw) {
  std::vector<std::vector<Polynomial>> rows;
  for (const auto& row_text : split_top(raw)) {
    if (row_text.size() < 2 || row_text.front() != '[' ||
        row_text.back() != ']')
      throw Error("matrix rows must be bracketed: " + row_text);
    std::vector<Polynomial> row;
    for (const auto& entry : split_top(row_text))
      row.push_back(Polynomial::parse(ring, entry));
    rows.push_back(std::move(row));
  }
  return rows;
}

void stmt_hom(Exec& ex, Lexer& lx) {
  std::string name = lx.read_ident("hom name");
  lx.expect(':');
  std::string dom_name = lx.read_ident("domain module");
  lx.expect_arrow();
  std::string cod_name = lx.read_ident("codomain module");
  lx.expect_keyword("matrix");
  std::string raw = lx.capture_balanced('[', ']');
  lx.expect(';');
  const Binding& dom = get_kind(ex, dom_name, BindingKind::Module, "module");
  const Binding& cod = get_kind(ex, cod_name, BindingKind::Module, "module");
  if (dom.module.ring() != cod.module.ring())
    throw Error("domain and codomain live over different rings");
  Binding b;
  b.kind = BindingKind::Hom;
  b.hom = MatrixHom(dom.module, cod.module,
                    parse_matrix(dom.module.ring(), raw));
  b.dom_name = dom_name;
  b.cod_name = cod_name;
  ex.session->bind(name, std::move(b));
}

void stmt_complex(Exec& ex, Lexer& lx) {
  std::string name = lx.read_ident("complex name");
  lx.expect_keyword("modules");
  std::string raw_modules = lx.capture_balanced('[', ']');
  lx.expect_keyword("diffs");
  std::string raw_diffs = lx.capture_balanced('[', ']');
  lx.expect(';');
  std::vector<Submodule> modules;
  std::vector<std::string> module_names = split_top(raw_modules);
  for (const auto& mn : module_names)
    modules.push_back(get_kind(ex, mn, BindingKind::Module, "module").module);
  std::vector<MatrixHom> diffs;
  std::vector<std::string> diff_names = split_top(raw_diffs);
  for (const auto& dn : diff_names)
    diffs.push_back(get_kind(ex, dn, BindingKind::Hom, "hom").hom);
  if (modules.empty()) throw Error("a complex needs at least one module");
  Binding b;
  b.kind = BindingKind::Complex;
  b.complex = ChainComplex(static_cast<int>(modules.size()) - 1,
                           std::move(modules), std::move(diffs));
  b.part_names = std::move(module_names);
  b.diff_names = std::move(diff_names);
  ex.session->bind(name, std::move(b));
}

void stmt_germ(Exec& ex, Lexer& lx) {
  std::string name = lx.read_ident("germ name");
  lx.expect(':');
  std::string src_name = lx.read_ident("source ring");
  lx.expect_arrow();
  std::string dst_name = lx.read_ident("target ring");
  lx.expect_keyword("sends");
  std::string raw_sends = lx.capture_balanced('[', ']');
  std::vector<std::string> doubled_names;
  bool have_doubled = false;
  if (lx.peek_char() != ';') {
    lx.expect_keyword("doubled");
    doubled_names = split_top(lx.capture_balanced('[', ']'));
    have_doubled = true;
  }
  lx.expect(';');
  const Binding& src = get_kind(ex, src_name, BindingKind::Ring, "ring");
  const Binding& dst = get_kind(ex, dst_name, BindingKind::Ring, "ring");
  std::vector<Polynomial> images;
  for (const auto& piece : split_top(raw_sends))
    images.push_back(Polynomial::parse(dst.ring, piece));
  if (images.size() != src.ring.arity())
    throw Error("expected one image per source variable");
  DoubleContext ctx_x(src.ring);
  DoubleContext ctx_y = [&] {
    if (!have_doubled) return DoubleContext(dst.ring);
    std::size_t m = dst.ring.arity();
    if (doubled_names.size() != 2 * m)
      throw Error("doubled clause must list both variable copies (" +
                  std::to_string(2 * m) + " names)");
    std::vector<std::string> first(doubled_names.begin(),
                                   doubled_names.begin() + m);
    std::vector<std::string> second(doubled_names.begin() + m,
                                    doubled_names.end());
    return DoubleContext(dst.ring, std::move(first), std::move(second));
  }();
  Binding b;
  b.kind = BindingKind::Germ;
  b.germ = RelativeMap(std::move(ctx_x), std::move(ctx_y),
                       RingMorphism(src.ring, dst.ring, std::move(images)));
  b.src_name = src_name;
  b.dst_name = dst_name;
  ex.session->bind(name, std::move(b));
}

void stmt_chainmap(Exec& ex, Lexer& lx, bool degree_one) {
  std::string name = lx.read_ident("map name");
  lx.expect(':');
  std::string src_name = lx.read_ident("source complex");
  lx.expect_arrow();
  std::string dst_name = lx.read_ident("target complex");
  lx.expect_keyword("maps");
  std::vector<std::string> comp_names =
      split_top(lx.capture_balanced('[', ']'));
  lx.expect(';');
  const Binding& src = get_kind(ex, src_name, BindingKind::Complex, "complex");
  const Binding& dst = get_kind(ex, dst_name, BindingKind::Complex, "complex");
  std::vector<MatrixHom> comps;
  for (const auto& cn : comp_names)
    comps.push_back(get_kind(ex, cn, BindingKind::Hom, "hom").hom);
  Binding b;
  if (degree_one) {
    b.kind = BindingKind::DegreeOneBinding;
    b.degree_map = DegreeOneMap(src.complex, dst.complex, std::move(comps));
  } else {
    b.kind = BindingKind::ChainMapBinding;
    b.chain_map = ChainMap(src.complex, dst.complex, std::move(comps));
  }
  b.src_name = src_name;
  b.dst_name = dst_name;
  b.part_names = std::move(comp_names);
  ex.session->bind(name, std::move(b));
}

void stmt_relhom(Exec& ex, Lexer& lx) {
  std::string name = lx.read_ident("hom name");
  lx.expect(':');
  std::string dom_name = lx.read_ident("domain module");
  lx.expect_arrow();
  std::string cod_name = lx.read_ident("codomain module");
  lx.expect_keyword("germ");
  std::string germ_name = lx.read_ident("germ name");
  lx.expect_keyword("images");
  std::string raw = lx.capture_balanced('[', ']');
  lx.expect(';');
  const Binding& dom = get_kind(ex, dom_name, BindingKind::Module, "module");
  const Binding& cod = get_kind(ex, cod_name, BindingKind::Module, "module");
  const Binding& germ = get_kind(ex, germ_name, BindingKind::Germ, "germ");
  if (dom.module.ring() != germ.germ.context_x().base())
    throw Error("domain module does not live over the germ's source ring");
  if (cod.module.ring() != germ.germ.context_y().base())
    throw Error("codomain module does not live over the germ's target ring");
  std::vector<ModuleElement> images;
  for (const auto& piece : split_top(raw)) {
    ModuleElement g = ModuleElement::parse(cod.module.ring(), piece);
    if (g.rank() != cod.module.rank())
      throw Error("image " + piece + " does not have rank " +
                  std::to_string(cod.module.rank()));
    images.push_back(std::move(g));
  }
  Binding b;
  b.kind = BindingKind::RelHom;
  b.rel_hom = GeneratorImageHom(germ.germ, dom.module, cod.module,
                                std::move(images));
  b.dom_name = dom_name;
  b.cod_name = cod_name;
  b.germ_name = germ_name;
  ex.session->bind(name, std::move(b));
}

void stmt_include(Exec& ex, Lexer& lx) {
  std::string path = lx.read_string();
  lx.expect(';');
  if (ex.depth >= 16) throw Error("include depth exceeded");
  std::string resolved =
      (!path.empty() && path.front() == '/') || ex.base_dir.empty()
          ? path
          : ex.base_dir + "/" + path;
  std::ifstream in(resolved);
  if (!in) throw Error("cannot open included file: " + resolved);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string content = buffer.str();
  std::string saved_dir = ex.base_dir;
  auto slash = resolved.find_last_of('/');
  ex.base_dir = slash == std::string::npos ? std::string()
                                           : resolved.substr(0, slash);
  ++ex.depth;
  try {
    exec_text(ex, content);
  } catch (const ParseError& pe) {
    --ex.depth;
    ex.base_dir = saved_dir;
    throw ParseError(pe.where, path + ":" + std::to_string(pe.where.line) +
                                   ":" + std::to_string(pe.where.col) + ": " +
                                   pe.what());
  }
  --ex.depth;
  ex.base_dir = saved_dir;
}

// ----------------------------------------------------------- commands

void emit(Exec& ex, const std::string& text) { ex.output += text; }

void emit_lines(Exec& ex, const std::vector<std::string>& lines) {
  if (lines.empty()) {
    emit(ex, "0\n");
    return;
  }
  for (const auto& line : lines) emit(ex, line + "\n");
}

void emit_elements(Exec& ex, const std::vector<ModuleElement>& elems) {
  std::vector<std::string> lines;
  for (const auto& e : elems) lines.push_back(e.to_string());
  emit_lines(ex, lines);
}

std::string ring_name_of_module(const Exec& ex, const std::string& mod_name) {
  return get_kind(ex, mod_name, BindingKind::Module, "module").ring_name;
}

void cmd_double(Exec& ex, Lexer& lx) {
  std::string target = lx.read_ident("name to double");
  lx.expect(';');
  const Binding& b = ex.session->get(target);
  if (b.kind == BindingKind::Module) {
    DoubleContext ctx(b.module.ring());
    DoubledModule dm = double_module(ctx, b.module);
    emit_lines(ex, dm.structural_generator_strings());
    std::string ring_d = b.ring_name + "_D";
    Binding rb;
    rb.kind = BindingKind::Ring;
    rb.ring = ctx.doubled();
    bind_derived(ex, ring_d, std::move(rb));
    Binding mb;
    mb.kind = BindingKind::Module;
    mb.module = dm.value();
    mb.ring_name = ring_d;
    bind_derived(ex, target + "_D", std::move(mb));
    return;
  }
  if (b.kind == BindingKind::Hom) {
    DoubleContext ctx(b.hom.domain().ring());
    DoubledHom dh = double_matrix_hom(ctx, b.hom);
    emit(ex, dh.value().matrix_to_string() + "\n");
    std::string ring_d = ring_name_of_module(ex, b.dom_name) + "_D";
    Binding rb;
    rb.kind = BindingKind::Ring;
    rb.ring = ctx.doubled();
    bind_derived(ex, ring_d, std::move(rb));
    Binding domb;
    domb.kind = BindingKind::Module;
    domb.module = dh.value().domain();
    domb.ring_name = ring_d;
    bind_derived(ex, b.dom_name + "_D", std::move(domb));
    Binding codb;
    codb.kind = BindingKind::Module;
    codb.module = dh.value().codomain();
    codb.ring_name = ring_d;
    bind_derived(ex, b.cod_name + "_D", std::move(codb));
    Binding hb;
    hb.kind = BindingKind::Hom;
    hb.hom = dh.value();
    hb.dom_name = b.dom_name + "_D";
    hb.cod_name = b.cod_name + "_D";
    bind_derived(ex, target + "_D", std::move(hb));
    return;
  }
  if (b.kind == BindingKind::Complex) {
    DoubleContext ctx(b.complex.ring());
    ChainComplex cd = double_complex(ctx, b.complex);
    std::vector<std::string> lines;
    for (const auto& d : cd.diffs()) lines.push_back(d.matrix_to_string());
    emit_lines(ex, lines);
    std::string ring_d = ring_name_of_module(ex, b.part_names.at(0)) + "_D";
    Binding rb;
    rb.kind = BindingKind::Ring;
    rb.ring = ctx.doubled();
    bind_derived(ex, ring_d, std::move(rb));
    std::vector<std::string> part_names_d;
    for (std::size_t k = 0; k < b.part_names.size(); ++k) {
      std::string nm = b.part_names[k] + "_D";
      part_names_d.push_back(nm);
      Binding mb;
      mb.kind = BindingKind::Module;
      mb.module = cd.modules()[k];
      mb.ring_name = ring_d;
      bind_derived(ex, nm, std::move(mb));
    }
    std::vector<std::string> diff_names_d;
    for (std::size_t k = 0; k < b.diff_names.size(); ++k) {
      std::string nm = b.diff_names[k] + "_D";
      diff_names_d.push_back(nm);
      Binding hb;
      hb.kind = BindingKind::Hom;
      hb.hom = cd.diffs()[k];
      hb.dom_name = part_names_d[k];
      hb.cod_name = part_names_d[k + 1];
      bind_derived(ex, nm, std::move(hb));
    }
    Binding cb;
    cb.kind = BindingKind::Complex;
    cb.complex = std::move(cd);
    cb.part_names = std::move(part_names_d);
    cb.diff_names = std::move(diff_names_d);
    bind_derived(ex, target + "_D", std::move(cb));
    return;
  }
  throw Error("double expects a module, hom, or complex");
}

void cmd_member(Exec& ex, Lexer& lx) {
  std::string mod_name = lx.read_ident("module name");
  std::string raw = lx.capture_balanced('(', ')');
  lx.expect(';');
  const Binding& b = get_kind(ex, mod_name, BindingKind::Module, "module");
  ModuleElement h = ModuleElement::parse(b.module.ring(), raw);
  if (h.rank() != b.module.rank())
    throw Error("element does not have rank " +
                std::to_string(b.module.rank()));
  emit(ex, b.module.contains(h) ? "true\n" : "false\n");
}

void cmd_eq(Exec& ex, Lexer& lx) {
  std::string a_name = lx.read_ident("first name");
  std::string b_name = lx.read_ident("second name");
  lx.expect(';');
  const Binding& a = ex.session->get(a_name);
  const Binding& b = ex.session->get(b_name);
  if (a.kind == BindingKind::Module && b.kind == BindingKind::Module) {
    if (a.module.ring() != b.module.ring())
      throw Error("modules live over different rings");
    if (a.module.rank() != b.module.rank())
      throw Error("modules have different ambient ranks");
    emit(ex, a.module == b.module ? "true\n" : "false\n");
    return;
  }
  if (a.kind == BindingKind::Hom && b.kind == BindingKind::Hom) {
    emit(ex, hom_eq_on_domain(a.hom, b.hom) ? "true\n" : "false\n");
    return;
  }
  throw Error("eq expects two modules or two homs");
}

void cmd_kernel(Exec& ex, Lexer& lx, bool want_kernel) {
  std::string hom_name = lx.read_ident("hom name");
  lx.expect(';');
  const Binding& b = get_kind(ex, hom_name, BindingKind::Hom, "hom");
  Submodule result = want_kernel ? kernel(b.hom) : image(b.hom);
  emit_elements(ex, result.canonical_generators());
}

void cmd_colength(Exec& ex, Lexer& lx) {
  std::string m_name = lx.read_ident("inner module");
  std::string n_name = lx.read_ident("outer module");
  lx.expect(';');
  const Binding& m = get_kind(ex, m_name, BindingKind::Module, "module");
  const Binding& n = get_kind(ex, n_name, BindingKind::Module, "module");
  Colength c = colength(m.module, n.module);
  emit(ex, c.finite ? std::to_string(c.value) + "\n" : "INFINITE\n");
}

void cmd_rank(Exec& ex, Lexer& lx) {
  std::string m_name = lx.read_ident("module name");
  lx.expect(';');
  const Binding& m = get_kind(ex, m_name, BindingKind::Module, "module");
  emit(ex, std::to_string(generic_rank(m.module)) + "\n");
}

void cmd_exact(Exec& ex, Lexer& lx) {
  std::string c_name = lx.read_ident("complex name");
  lx.expect(';');
  const Binding& c = get_kind(ex, c_name, BindingKind::Complex, "complex");
  emit(ex, is_exact_everywhere(c.complex) ? "true\n" : "false\n");
}

void cmd_homotopy(Exec& ex, Lexer& lx) {
  std::string a_name = lx.read_ident("first chain map");
  std::string b_name = lx.read_ident("second chain map");
  std::string mu_name = lx.read_ident("degree-one map");
  lx.expect(';');
  const Binding& a =
      get_kind(ex, a_name, BindingKind::ChainMapBinding, "chain map");
  const Binding& b =
      get_kind(ex, b_name, BindingKind::ChainMapBinding, "chain map");
  const Binding& mu =
      get_kind(ex, mu_name, BindingKind::DegreeOneBinding, "degree-one map");
  emit(ex, is_homotopy(a.chain_map, b.chain_map, mu.degree_map)
               ? "true\n"
               : "false\n");
}

void cmd_relative_double(Exec& ex, Lexer& lx) {
  std::string germ_name = lx.read_ident("germ name");
  std::string hom_name = lx.read_ident("hom name");
  lx.expect(';');
  const Binding& germ = get_kind(ex, germ_name, BindingKind::Germ, "germ");
  const Binding& f = get_kind(ex, hom_name, BindingKind::RelHom,
                              "hom over a germ");
  if (!(f.rel_hom.relative().pullback() == germ.germ.pullback()))
    throw Error(hom_name + " was declared over a different germ");
  RelativeDoubledHom rd = relative_double_hom(f.rel_hom);
  emit_elements(ex, rd.assignments());
}

void cmd_verify(Exec& ex, Lexer& lx) {
  auto [id, done] = lx.read_word();
  if (id.empty()) throw Error("verify needs a property id");
  unsigned trials = 20;
  uint64_t seed = 0;
  while (!done) {
    auto [flag, last] = lx.read_word();
    done = last;
    if (flag.empty()) break;
    if (flag == "--trials") {
      auto [value, l2] = lx.read_word();
      done = l2;
      try {
        trials = static_cast<unsigned>(std::stoul(value));
      } catch (const std::exception&) {
        throw Error("invalid trial count: " + value);
      }
    } else if (flag == "--seed") {
      auto [value, l2] = lx.read_word();
      done = l2;
      try {
        seed = std::stoull(value);
      } catch (const std::exception&) {
        throw Error("invalid seed: " + value);
      }
    } else if (flag == "--format") {
      auto [value, l2] = lx.read_word();
      done = l2;
      if (value != "text") throw Error("unsupported format: " + value);
    } else {
      throw Error("unknown verify flag: " + flag);
    }
  }
  PropertyReport report = run_property(id, trials, seed);
  emit(ex, report.summary_line() + "\n");
  if (!report.pass()) {
    write_replay_files(report, ex.replay_dir);
    ex.property_failure = true;
  }
}

// ---------------------------------------------------------- dispatcher

void exec_statement(Exec& ex, Lexer& lx) {
  SourcePos pos = lx.here();
  std::string head = lx.read_ident("statement");
  try {
    if (head == "ring") return stmt_ring(ex, lx);
    if (head == "module") return stmt_module(ex, lx);
    if (head == "hom") return stmt_hom(ex, lx);
    if (head == "complex") return stmt_complex(ex, lx);
    if (head == "germ") return stmt_germ(ex, lx);
    if (head == "chainmap") return stmt_chainmap(ex, lx, false);
    if (head == "degmap") return stmt_chainmap(ex, lx, true);
    if (head == "relhom") return stmt_relhom(ex, lx);
    if (head == "include") return stmt_include(ex, lx);
    if (head == "double") return cmd_double(ex, lx);
    if (head == "member") return cmd_member(ex, lx);
    if (head == "eq") return cmd_eq(ex, lx);
    if (head == "kernel") return cmd_kernel(ex, lx, true);
    if (head == "image") return cmd_kernel(ex, lx, false);
    if (head == "colength") return cmd_colength(ex, lx);
    if (head == "rank") return cmd_rank(ex, lx);
    if (head == "exact") return cmd_exact(ex, lx);
    if (head == "homotopy") return cmd_homotopy(ex, lx);
    if (head == "verify") return cmd_verify(ex, lx);
    if (head == "relative") {
      lx.expect('-');
      lx.expect_keyword("double");
      return cmd_relative_double(ex, lx);
    }
    throw Error("unknown statement: " + head);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(pos, head + ": " + e.what());
  }
}

void exec_text(Exec& ex, const std::string& text) {
  Lexer lx(text);
  while (!lx.at_end()) exec_statement(ex, lx);
}

}  // namespace

// ------------------------------------------------------------ public API

Session parse_session(const std::string& text) {
  Session session;
  Exec ex;
  ex.session = &session;
  exec_text(ex, text);
  return session;
}

std::string print_session(const Session& session) {
  std::string out;
  for (const auto& name : session.order()) {
    const Binding& b = session.get(name);
    switch (b.kind) {
      case BindingKind::Ring:
        out += print_ring_decl(name, b.ring);
        break;
      case BindingKind::Module:
        out += print_module_decl(name, b.ring_name, b.module);
        break;
      case BindingKind::Hom:
        out += print_hom_decl(name, b.dom_name, b.cod_name, b.hom);
        break;
      case BindingKind::Complex:
        out += "complex " + name + " modules [" + join(b.part_names, ", ") +
               "] diffs [" + join(b.diff_names, ", ") + "];\n";
        break;
      case BindingKind::Germ:
        out += print_germ_decl(name, b.src_name, b.dst_name,
                               b.germ.pullback(), b.germ.context_y());
        break;
      case BindingKind::ChainMapBinding:
        out += "chainmap " + name + " : " + b.src_name + " -> " + b.dst_name +
               " maps [" + join(b.part_names, ", ") + "];\n";
        break;
      case BindingKind::DegreeOneBinding:
        out += "degmap " + name + " : " + b.src_name + " -> " + b.dst_name +
               " maps [" + join(b.part_names, ", ") + "];\n";
        break;
      case BindingKind::RelHom: {
        std::vector<std::string> images;
        for (const auto& g : b.rel_hom.images())
          images.push_back(g.to_string());
        out += "relhom " + name + " : " + b.dom_name + " -> " + b.cod_name +
               " germ " + b.germ_name + " images [" + join(images, ", ") +
               "];\n";
        break;
      }
    }
  }
  return out;
}

std::string exec_command(Session& session, const std::string& command) {
  Exec ex;
  ex.session = &session;
  exec_text(ex, command);
  return ex.output;
}

SessionResult run_session_text(const std::string& text,
                               const std::string& include_dir) {
  Session session;
  Exec ex;
  ex.session = &session;
  ex.base_dir = include_dir;
  SessionResult result;
  try {
    exec_text(ex, text);
    result.output = std::move(ex.output);
    result.exit_code = ex.property_failure ? 1 : 0;
  } catch (const ParseError& pe) {
    result.output = std::move(ex.output);
    result.error = "error: " + std::to_string(pe.where.line) + ":" +
                   std::to_string(pe.where.col) + ": " + pe.what();
    result.exit_code = 1;
  } catch (const Error& e) {
    result.output = std::move(ex.output);
    result.error = std::string("error: ") + e.what();
    result.exit_code = 1;
  }
  return result;
}

SessionResult run_session_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    SessionResult result;
    result.error = "error: cannot open session file: " + path;
    result.exit_code = 1;
    return result;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto slash = path.find_last_of('/');
  return run_session_text(buffer.str(),
                          slash == std::string::npos
                              ? std::string()
                              : path.substr(0, slash));
}

}  // namespace doublekit
