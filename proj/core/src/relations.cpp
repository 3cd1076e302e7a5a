#include "diagcat/relations.hpp"

#include <algorithm>
#include <sstream>

namespace diagcat {

namespace {

std::string idx(const std::string& stem, int i) {
  std::ostringstream out;
  out << stem << i;
  return out.str();
}

// The monoidal algebra relations shared by both kinds.
void add_basic(std::vector<Relation>& out, const std::string& prefix) {
  out.push_back({prefix + "mult.assoc", {"m . (m ox id_1)", "m . (id_1 ox m)"}});
  out.push_back({prefix + "unit.left", {"m . (u ox id_1)", "id_1"}});
  out.push_back({prefix + "unit.right", {"m . (id_1 ox u)", "id_1"}});
  out.push_back({prefix + "cup.norm", {"u* . u", "id_0"}});
  out.push_back({prefix + "mult.norm", {"m . m*", "{d^2} . id_1"}});
  out.push_back({prefix + "frobenius",
                 {"(m ox id_1) . (id_1 ox m*)", "m* . m",
                  "(id_1 ox m) . (m* ox id_1)"}});
}

std::vector<Relation> suite_t1() {
  std::vector<Relation> out;
  add_basic(out, "T1.");
  return out;
}

std::vector<Relation> suite_t2() {
  std::vector<Relation> out;
  add_basic(out, "T2.1.");
  out.push_back({"T2.2.e.idem", {"e . e", "e"}});
  out.push_back({"T2.2.e.sa", {"e*", "e"}});
  out.push_back({"T2.2.f.sa", {"f*", "f"}});
  out.push_back({"T2.2.f.shift", {"(id_1 ox f) . f", "f . (id_1 ox f)"}});
  out.push_back({"T2.3.eu", {"e . u", "u"}});
  out.push_back({"T2.4.exp.left", {"m . e . m*", "{b^2} . id_1"}});
  out.push_back({"T2.4.exp.right", {"m . (id_1 ox e) . m*", "{b^2} . id_1"}});
  out.push_back({"T2.5.interchange",
                 {"m . m . (e ox e ox e)", "e . m . m . (e ox id_1 ox e)"}});
  out.push_back(
      {"T2.f.def", {"f", "{b^-2} . (id_1 ox (m . e)) . m*"}});
  return out;
}

std::vector<Relation> suite_bj(int n) {
  std::vector<Relation> out;
  for (int i = 1; i <= n; ++i) {
    const std::string e = idx("e", i);
    const std::string p = idx("p", i);
    out.push_back({"BJ.a.idem." + e, {e + " . " + e, e}});
    out.push_back({"BJ.sa." + e, {e + "*", e}});
    out.push_back({"BJ.b.idem." + p, {p + " . " + p, p}});
    out.push_back({"BJ.sa." + p, {p + "*", p}});
    out.push_back({"BJ.c.absorb." + e, {e + " . " + p, p + " . " + e, e}});
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const std::string ei = idx("e", i);
      const std::string ej = idx("e", j);
      const std::string pi = idx("p", i);
      const std::string pj = idx("p", j);
      if (j - i >= 2) {
        out.push_back({"BJ.a.comm." + ei + "." + ej,
                       {ei + " . " + ej, ej + " . " + ei}});
        out.push_back({"BJ.c.comm." + pi + "." + ej,
                       {pi + " . " + ej, ej + " . " + pi}});
        out.push_back({"BJ.c.comm." + pj + "." + ei,
                       {pj + " . " + ei, ei + " . " + pj}});
      }
      out.push_back(
          {"BJ.b.comm." + pi + "." + pj, {pi + " . " + pj, pj + " . " + pi}});
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j : {i - 1, i + 1}) {
      if (j < 1 || j > n) continue;
      const std::string ei = idx("e", i);
      const std::string ej = idx("e", j);
      out.push_back({"BJ.a.jones." + ei + "." + ej,
                     {ei + " . " + ej + " . " + ei, "{d^-2} . " + ei}});
      // e_i p_j e_i with |i - j| = 1: the scale depends on the parity of the
      // middle projection: over an even p the white parameter appears, over
      // an odd p the black one.
      const std::string pj = idx("p", j);
      const std::string scale = (j % 2 == 0) ? "{b^-2}" : "{w^-2}";
      out.push_back({"BJ.d." + ei + "." + pj,
                     {ei + " . " + pj + " . " + ei, scale + " . " + ei}});
      // p_i e_j p_i = scale * p_j p_i with the complementary parity rule.
      const std::string pi = idx("p", i);
      const std::string pscale = (i % 2 == 0) ? "{b^-2}" : "{w^-2}";
      out.push_back({"BJ.e." + pi + "." + ej,
                     {pi + " . " + ej + " . " + pi,
                      pscale + " . " + pj + " . " + pi}});
    }
  }
  return out;
}

std::vector<Relation> suite_reduced() {
  std::vector<Relation> out;
  out.push_back({"reduced.alpha.e1.idem", {"e1 . e1", "e1"}});
  out.push_back({"reduced.alpha.e2.idem", {"e2 . e2", "e2"}});
  out.push_back({"reduced.alpha.jones.121", {"e1 . e2 . e1", "{d^-2} . e1"}});
  out.push_back({"reduced.alpha.jones.212", {"e2 . e1 . e2", "{d^-2} . e2"}});
  out.push_back({"reduced.beta.p1.idem", {"p1 . p1", "p1"}});
  out.push_back({"reduced.beta.p2.idem", {"p2 . p2", "p2"}});
  out.push_back({"reduced.beta.comm.p1.p2", {"p1 . p2", "p2 . p1"}});
  out.push_back({"reduced.beta.comm.sp1.p2",
                 {"(id_1 ox p1) . p2", "p2 . (id_1 ox p1)"}});
  out.push_back({"reduced.beta.comm.sp2.p2",
                 {"(id_1 ox p2) . p2", "p2 . (id_1 ox p2)"}});
  out.push_back({"reduced.gamma.comm.e2.sp2",
                 {"e2 . (id_1 ox p2)", "(id_1 ox p2) . e2"}});
  out.push_back({"reduced.gamma.comm.p2.se2",
                 {"p2 . (id_1 ox e2)", "(id_1 ox e2) . p2"}});
  out.push_back({"reduced.gamma.absorb.1", {"e1 . p1", "p1 . e1", "e1"}});
  out.push_back({"reduced.gamma.absorb.2", {"e2 . p2", "p2 . e2", "e2"}});
  out.push_back({"reduced.delta1.e1p2e1", {"e1 . p2 . e1", "{b^-2} . e1"}});
  out.push_back({"reduced.delta1.se1p2se1",
                 {"(id_1 ox e1) . p2 . (id_1 ox e1)",
                  "{b^-2} . (id_1 ox e1)"}});
  out.push_back({"reduced.delta2.e2p1e2", {"e2 . p1 . e2", "{w^-2} . e2"}});
  out.push_back(
      {"reduced.delta2.e2sp1e2", {"e2 . (id_1 ox p1) . e2", "{w^-2} . e2"}});
  out.push_back({"reduced.eps1",
                 {"{b^2} . p2 . e1 . p2", "{w^2} . p1 . e2 . p1", "p1 . p2"}});
  out.push_back({"reduced.eps2",
                 {"{b^2} . p2 . (id_1 ox e1) . p2",
                  "{w^2} . (id_1 ox p1) . e2 . (id_1 ox p1)",
                  "(id_1 ox p1) . p2"}});
  return out;
}

std::vector<Relation> suite_star() {
  std::vector<Relation> out;
  out.push_back({"star.x", {"e . m* . m . e", "{b^2} . f* . e"}});
  out.push_back({"star.y",
                 {"(id_1 ox e) . m* . m . (id_1 ox e)",
                  "{b^2} . f* . (id_1 ox e)"}});
  out.push_back({"star.z", {"f*", "f* . f"}});
  out.push_back({"star.t.ef", {"e . f", "f . e"}});
  out.push_back({"star.t.sef", {"(id_1 ox e) . f", "f . (id_1 ox e)"}});
  out.push_back({"star.t.mm.sf",
                 {"m* . m . (id_1 ox f)", "(id_1 ox f) . (m* . m)"}});
  out.push_back({"star.t.f.smm",
                 {"f . (id_1 ox (m* . m))", "(id_1 ox (m* . m)) . f"}});
  return out;
}

std::vector<Relation> suite_useful() {
  return {{"useful.eme",
           {"m . (e ox e)", "e . m . (id_1 ox e)", "e . m . e"}}};
}

std::vector<Relation> suite_aux() {
  std::vector<Relation> out;
  out.push_back({"aux.f.idem", {"f . f", "f"}});
  out.push_back({"aux.mmf.sa",
                 {"m* . m . (id_1 ox f)", "(m* . m . (id_1 ox f))*"}});
  out.push_back({"aux.mmf.absorb",
                 {"m . m* . (id_1 ox f)", "{d^2} . (id_1 ox f)"}});
  out.push_back(
      {"aux.comm1",
       {"m* . m . (id_1 ox (f . f*))",
        "{b^-4} . (id_1 ox id_1 ox (m . e)) . m* . m* . m . m . "
        "(id_1 ox id_1 ox (e . m*))"}});
  out.push_back(
      {"aux.comm2",
       {"(id_1 ox (m* . m)) . f . f*",
        "{b^-4} . (id_1 ox (m* . m . e)) . m* . m . (id_1 ox (e . m* . m))"}});
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "T1", "T2", "BJ", "reduced", "star", "useful", "aux"};
  return names;
}

Kind suite_kind(const std::string& name) {
  if (name == "T1") return Kind::TL;
  for (const auto& n : suite_names()) {
    if (n == name) return Kind::FC;
  }
  throw ParseError("unknown relation suite \"" + name + "\"");
}

std::vector<Relation> relation_suite(const std::string& name, int max_index) {
  if (name == "T1") return suite_t1();
  if (name == "T2") return suite_t2();
  if (name == "BJ") return suite_bj(max_index);
  if (name == "reduced") return suite_reduced();
  if (name == "star") return suite_star();
  if (name == "useful") return suite_useful();
  if (name == "aux") return suite_aux();
  throw ParseError("unknown relation suite \"" + name + "\"");
}

SuiteReport verify_suite(const std::string& name, int max_index) {
  const Kind kind = suite_kind(name);
  const std::vector<Relation> relations = relation_suite(name, max_index);
  const GeneratorSet gens = GeneratorSet::build(kind, std::max(4, max_index));
  SuiteReport report{name, {}, true};
  for (const auto& rel : relations) {
    std::vector<Morphism> sides;
    sides.reserve(rel.words.size());
    for (const auto& w : rel.words) sides.push_back(evaluate_word(w, gens));
    RelationResult res{rel.id, true, ""};
    for (std::size_t i = 0; i + 1 < sides.size(); ++i) {
      if (!equal_padded(sides[i], sides[i + 1])) {
        res.holds = false;
        std::ostringstream detail;
        detail << "sides " << i + 1 << " and " << i + 2 << " differ in "
               << padded_difference_terms(sides[i], sides[i + 1])
               << " diagram terms";
        res.detail = detail.str();
        break;
      }
    }
    report.all_hold = report.all_hold && res.holds;
    report.results.push_back(std::move(res));
  }
  return report;
}

}  // namespace diagcat
