#include "ahc/explain.hpp"

#include "ahc/syntax.hpp"

#include <map>
#include <sstream>

namespace ahc {
namespace {

std::string param_string(const Params& p, std::string_view key) {
  if (!p.contains(key)) return "?";
  for (const auto& [k, v] : p.entries()) {
    if (k != key) continue;
    if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
    return std::get<std::string>(v);
  }
  return "?";
}

std::string headline(const ProofNode& node) {
  const auto& p = node.params;
  const auto get = [&](std::string_view key) { return param_string(p, key); };
  switch (node.rule) {
    case Rule::Table: return "Classification table row '" + get("row") + "'.";
    case Rule::ClosedForm: return "Closed form '" + get("form") + "'.";
    case Rule::Oracle: {
      std::string s = "Rank computed over F_" + std::to_string(node.oracle ? node.oracle->prime : 0);
      if (node.oracle) {
        s += " with seed " + std::to_string(node.oracle->seed) + ", minimum over " +
             std::to_string(node.oracle->trials) + " trials";
      }
      return s + " (" + get("role") + ").";
    }
    case Rule::MonotoneDown:
      return "Remove general points from " + get("from") + ", which is non-special with v >= -1.";
    case Rule::EmptyUp:
      return "Add general points to " + get("from") + " of dimension " + get("from_dim") +
             "; each one cuts the dimension by at least one.";
    case Rule::SimplePoints:
      return "Drop " + get("simple_points") + " general simple points; each one cuts the dimension by one.";
    case Rule::Castelnuovo:
      return "Specialize " + get("specialize") + " onto a hyperplane and split into kernel and trace.";
    case Rule::Cone:
      return "The point of multiplicity d is a vertex: every member is a cone over a hypersurface one dimension down.";
    case Rule::LfP2:
    case Rule::LfP3:
    case Rule::LfQuartic:
    case Rule::LfGeneral:
      return "Specialize the (d-1)-fold point and part of the nodes onto a hyperplane.";
    case Rule::Deg1:
      return "Specialize b=" + get("b") + " nodes to the exceptional component of a (1,b)-degeneration.";
    case Rule::Deg2:
      return "Second degeneration with b=" + get("b") + "; beta=" + get("beta") +
             " of those nodes approach the common divisor.";
    case Rule::QuarticR3:
    case Rule::QuarticR4:
    case Rule::QuarticGen:
      return "Quartic (1,b)-degeneration with b=" + get("b") + ".";
    case Rule::CubicBase: return "Cubic base case " + get("case") + ".";
    case Rule::CubicStep: return "Cubic induction from P^" + std::to_string(node.claim.system.r() - 3) +
                                 " through the blown-up subspace; subgoals:";
    case Rule::CubicMatching: return "The matching system restricts to K1 and a smaller matching system:";
    case Rule::CubicK1: return "K1 restricts to K2 and K1 three dimensions down:";
    case Rule::CubicK2: return "K2 restricts to quadrics through three subspaces and K2 one dimension down:";
    case Rule::Cubic2L: return "Restrict the system singular along L to a hyperplane:";
  }
  return "";
}

class Narrator {
 public:
  std::string run(const NodePtr& root) {
    visit(root, 0);
    return out_.str();
  }

 private:
  void visit(const NodePtr& node, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    if (auto it = index_.find(node.get()); it != index_.end()) {
      out_ << pad << "- " << describe(node->claim) << " (see #" << it->second << ")\n";
      return;
    }
    const auto id = index_.size() + 1;
    index_.emplace(node.get(), id);
    out_ << pad << "#" << id << " [" << to_string(node->rule) << "] " << describe(node->claim) << "\n";
    out_ << pad << "   " << headline(*node) << "\n";
    for (const auto& s : node->side_conditions) {
      out_ << pad << "   check " << s.name << " = " << s.value << " (" << s.relation << ")\n";
    }
    for (const auto& c : node->children) visit(c, depth + 1);
  }

  std::ostringstream out_;
  std::map<const ProofNode*, std::size_t> index_;
};

}  // namespace

std::string explain(const Certificate& certificate) {
  if (!certificate.root) return "";
  return Narrator().run(certificate.root);
}

}  // namespace ahc
