#include <ostream>

#include "infinireg/cli/script.hpp"
#include "infinireg/homotopy/homotopy.hpp"
#include "infinireg/regulator/regulator.hpp"

namespace infinireg {

namespace {

constexpr unsigned kDefaultCap = 6;

std::string command_text(const CommandRecord& cmd) {
  std::string out = cmd.name;
  for (const auto& a : cmd.args) out += " " + a;
  for (const auto& [k, v] : cmd.options) out += " --" + k + (v.empty() ? "" : " " + v);
  return out;
}

const std::string& arg(const CommandRecord& cmd, std::size_t k) {
  if (k >= cmd.args.size()) throw Error(ErrorCode::Precondition, cmd.name + ": missing argument " + std::to_string(k + 1));
  return cmd.args[k];
}

ValueKind kind_of(const CommandScript& s, const std::string& name) {
  if (name == "tau0") return ValueKind::Splitting;
  if (name == "id") return ValueKind::Hom;
  const auto it = s.kinds.find(name);
  if (it == s.kinds.end()) throw Error(ErrorCode::UnknownIdent, "unknown identifier '" + name + "'");
  return it->second;
}

Splitting primary_splitting(const CommandScript& s, const std::string& name) {
  const NamedSplitting d = s.splitting(name, s.primary);
  if (d.ring != s.primary) throw Error(ErrorCode::Precondition, "splitting '" + name + "' is not on the primary ring");
  return d.value;
}

Splitting splitting_on(const CommandScript& s, const std::string& name, const std::string& ring) {
  const NamedSplitting d = s.splitting(name, ring);
  if (d.ring != ring) throw Error(ErrorCode::Precondition, "splitting '" + name + "' is not on ring '" + ring + "'");
  return d.value;
}

// delta of a bloch or infbloch name, or the fwedge itself.
FWedgeSum wedge_of(const CommandScript& s, const std::string& name) {
  switch (kind_of(s, name)) {
    case ValueKind::FWedge: return s.fwedges.at(name);
    case ValueKind::Bloch: return delta(s.blochs.at(name));
    case ValueKind::InfBloch: return delta_inf(s.infblochs.at(name));
    default: throw Error(ErrorCode::Precondition, "'" + name + "' has no wedge image");
  }
}

unsigned cap_of(const CommandRecord& cmd) {
  const auto it = cmd.options.find("cap");
  return it == cmd.options.end() ? kDefaultCap : static_cast<unsigned>(std::stoul(it->second));
}

std::string print_value(const CommandScript& s, const std::string& name) {
  const RingSpec& spec = s.ring();
  switch (kind_of(s, name)) {
    case ValueKind::Ring: {
      const RingSpec& r = s.rings.at(name);
      std::string out = "ring " + name + " { xvars = [";
      for (int j = 0; j < r.n; ++j) out += (j ? ", " : "") + r.xname(j);
      out += "]; tvars = [";
      for (int i = 0; i < r.m; ++i) out += (i ? ", " : "") + r.tname(i);
      return out + "]; }";
    }
    case ValueKind::Elem: return s.elems.at(name).to_string(spec);
    case ValueKind::Splitting: {
      const NamedSplitting d = s.splitting(name, s.primary);
      return d.value.to_string(s.rings.at(d.ring));
    }
    case ValueKind::Hom: return s.hom(name).value.to_string();
    case ValueKind::Bloch: return s.blochs.at(name).to_string(spec);
    case ValueKind::InfBloch: return s.infblochs.at(name).to_string(spec);
    case ValueKind::FWedge: return s.fwedges.at(name).to_string(spec);
    case ValueKind::Cech: {
      const CechBlock& c = s.cechs.at(name);
      return "cech " + name + " with " + std::to_string(c.cover.size()) + " opens, " +
             (c.data.mode() == CechMode::Consistent ? "CONSISTENT" : "RAW") + " data";
    }
  }
  return {};
}

std::string pair_label(int i, int j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

bool cech_verify(const std::string& name, const CechBlock& c, const RingSpec& spec, std::ostream& out) {
  out << "cech " << name << ": " << c.cover.size() << " opens, "
      << (c.data.mode() == CechMode::Consistent ? "CONSISTENT" : "RAW") << " data\n";
  const GammaCocycle g = assemble_gamma(c.cover, c.data);
  for (const auto& [key, value] : g.values()) {
    out << "  gamma" << pair_label(key.first, key.second) << " = " << value.to_string(spec) << "\n";
  }
  bool ok = true;
  const auto failures = cocycle_failures(g);
  out << "  cocycle: " << (failures.empty() ? "PASS" : "FAIL") << "\n";
  for (const auto& [i, j, k] : failures) {
    out << "    fails on (" << i + 1 << "," << j + 1 << "," << k + 1 << ")\n";
  }
  ok = ok && failures.empty();
  if (c.data.mode() == CechMode::Consistent) {
    const bool boundary = boundary_to_boundary(c.cover, c.data.sections());
    out << "  boundary: " << (boundary ? "PASS" : "FAIL") << "\n";
    ok = ok && boundary;
  }
  return ok;
}

bool cech_rho1(const std::string& name, const CechBlock& c, const RingSpec& spec, unsigned cap, std::ostream& out) {
  const Rho1Report report = rho1_sections(c.cover, c.data, cap);
  out << "cech " << name << ": rho1 sections, cap " << report.cap << "\n";
  for (std::size_t i = 0; i < report.sections.size(); ++i) {
    out << "  section " << i + 1 << " = " << report.sections[i].to_string(spec) << "\n";
  }
  for (const auto& [key, prim] : report.primitives) {
    out << "  pair " << pair_label(key.first, key.second) << ": ";
    if (prim) {
      out << "exact, primitive " << prim->to_string(spec) << "\n";
    } else {
      out << "NOT_EXACT_UP_TO_CAP (cap " << report.cap << ")\n";
    }
  }
  out << "  rho1: " << (report.ok() ? "OK" : "FLAGGED") << "\n";
  return report.ok();
}

}  // namespace

bool execute_command(const CommandScript& s, const CommandRecord& cmd, std::ostream& out) {
  const RingSpec& spec = s.ring();
  if (cmd.name == "print") {
    out << arg(cmd, 0) << " = " << print_value(s, arg(cmd, 0)) << "\n";
    return true;
  }
  if (cmd.name == "li2") {
    const Splitting d = primary_splitting(s, arg(cmd, 0));
    const std::string& q = arg(cmd, 1);
    const auto it = cmd.options.find("method");
    const std::string method = it == cmd.options.end() ? "first" : it->second;
    if (kind_of(s, q) == ValueKind::Bloch) {
      if (method != "first") throw Error(ErrorCode::Precondition, "the second construction needs an infbloch argument");
      out << "li2 = " << li2_first(s.blochs.at(q), d).to_string(spec) << "\n";
      return true;
    }
    const InfBlochSum& g = s.infblochs.at(q);
    if (method == "first") {
      out << "li2 = " << li2_first(g, d).to_string(spec) << "\n";
      return true;
    }
    if (method == "second") {
      out << "li2 = " << li2_second(g, d).to_string(spec) << "\n";
      return true;
    }
    const Sym3Class first = li2_first(g, d);
    const Sym3Class second = li2_second(g, d);
    out << "first = " << first.to_string(spec) << "\nsecond = " << second.to_string(spec) << "\n";
    out << "agreement: " << (first == second ? "PASS" : "FAIL") << "\n";
    return first == second;
  }
  if (cmd.name == "delta") {
    out << "delta = " << wedge_of(s, arg(cmd, 0)).to_string(spec) << "\n";
    return true;
  }
  if (cmd.name == "fiveterm") {
    out << "fiveterm = " << five_term_sum(s.elems.at(arg(cmd, 0)), s.elems.at(arg(cmd, 1))).to_string(spec) << "\n";
    return true;
  }
  if (cmd.name == "logdlog") {
    out << "logdlog = " << logdlog(wedge_of(s, arg(cmd, 0)), spec).to_string(spec) << "\n";
    return true;
  }
  if (cmd.name == "homotopy" || cmd.name == "eqhom") {
    const NamedHom f = s.hom(arg(cmd, 0));
    if (f.source != s.primary) throw Error(ErrorCode::Precondition, "the hom must start at the primary ring");
    const Splitting d1 = splitting_on(s, arg(cmd, 1), f.source);
    const Splitting d2 = splitting_on(s, arg(cmd, 2), f.target);
    const RingSpec& target = s.rings.at(f.target);
    if (cmd.name == "homotopy") {
      out << "h = " << homotopy_h(f.value, d1, d2, wedge_of(s, arg(cmd, 3))).to_string(target) << "\n";
      return true;
    }
    const EqhomSides sides = eqhom_sides(f.value, d1, d2, s.infblochs.at(arg(cmd, 3)));
    out << "lhs = " << sides.lhs.to_string(target) << "\nrhs = " << sides.rhs.to_string(target) << "\n";
    out << "eqhom: " << (sides.lhs == sides.rhs ? "PASS" : "FAIL") << "\n";
    return sides.lhs == sides.rhs;
  }
  if (cmd.name == "cech") {
    std::vector<std::string> names;
    if (cmd.args.size() > 1) {
      names.push_back(cmd.args[1]);
    } else {
      names = s.cech_order;
    }
    if (names.empty()) throw Error(ErrorCode::Precondition, "the script has no cech block");
    bool ok = true;
    for (const auto& n : names) {
      if (kind_of(s, n) != ValueKind::Cech) throw Error(ErrorCode::Precondition, "'" + n + "' is not a cech block");
      const CechBlock& c = s.cechs.at(n);
      ok = (arg(cmd, 0) == "verify" ? cech_verify(n, c, spec, out) : cech_rho1(n, c, spec, cap_of(cmd), out)) && ok;
    }
    return ok;
  }
  throw Error(ErrorCode::Precondition, "unknown command '" + cmd.name + "'");
}

int run_script(const CommandScript& script, std::ostream& out) {
  bool ok = true;
  for (const auto& cmd : script.commands) {
    out << "> " << command_text(cmd) << "\n";
    try {
      ok = execute_command(script, cmd, out) && ok;
    } catch (const Error& e) {
      out << "ERROR at " << cmd.pos.line << ":" << cmd.pos.column << ": " << e.what() << "\n";
      ok = false;
    }
  }
  return ok ? 0 : 1;
}

}  // namespace infinireg
