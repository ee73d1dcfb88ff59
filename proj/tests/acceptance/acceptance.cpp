// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Exits nonzero if any criterion fails.

#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sullivan/attachment.hpp"
#include "sullivan/cohomology.hpp"
#include "sullivan/even_complex.hpp"
#include "sullivan/formality.hpp"
#include "sullivan/format.hpp"
#include "sullivan/job.hpp"
#include "sullivan/minimal_model.hpp"

#include "fixture_models.hpp"
#include "oracle.hpp"
#include "properties.hpp"

using namespace sullivan;
using sullivan::testkit::Rng;

namespace {

/// Collects failed checks for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <typename A, typename B>
  void equal(const A& a, const B& b, const std::string& what) {
    if (a == b) return;
    std::ostringstream os;
    os << what << ": got " << show(a) << ", expected " << show(b);
    failures_.push_back(os.str());
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  template <typename T>
  static std::string show(const T& v) {
    std::ostringstream os;
    if constexpr (requires { os << v; }) {
      os << v;
    } else {
      os << "(";
      bool first = true;
      for (const auto& x : v) {
        os << (first ? "" : ", ") << x;
        first = false;
      }
      os << ")";
    }
    return os.str();
  }
  std::vector<std::string> failures_;
};

std::string d_of(const BigradedModel& M, const std::string& name) {
  return to_string(M.generators(), M.d(M.generators().id_of(name)));
}

std::vector<std::size_t> attachment_dims(const AttachmentModel& Ma, int top) {
  std::vector<std::size_t> out;
  for (int m = 0; m <= top; ++m) out.push_back(attachment_cohomology(Ma, m).dimension());
  return out;
}

void wedge_model(Check& c) {
  const BigradedModel M = testkit::model_of_fixture("wedge3-s2");
  const auto s0 = stage_slice(M, 0, 2);
  const auto s1 = stage_slice(M, 1, 3);
  c.equal(s0.size(), std::size_t{3}, "stage-0 degree-2 generators");
  c.equal(s1.size(), std::size_t{6}, "stage-1 degree-3 generators");
  std::multiset<std::string> targets;
  for (const auto& g : s1) targets.insert(d_of(M, g.name));
  c.equal(targets, std::multiset<std::string>{"a1^2", "a2^2", "a3^2", "a1*a2", "a1*a3", "a2*a3"},
          "stage-1 differentials");
  const oracle::Dgca O = oracle::from_model(M);
  for (int m = 0; m <= 5; ++m) {
    const std::size_t a = graded_component(M.algebra, m).dimension();
    c.equal(cohomology(M.dgca, m).dimension(), a, "dim H^" + std::to_string(m) + " vs A");
    c.equal(oracle::cohomology_dimension(O, m), a, "oracle dim H^" + std::to_string(m) + " vs A");
    if (m >= 3) c.equal(a, std::size_t{0}, "A^" + std::to_string(m));
  }
}

void wedge_with_cell(Check& c) {
  const BigradedModel M = testkit::model_of_fixture("ex3.2");
  const AlphaFunctional alpha = testkit::alpha_of_fixture("ex3.2");
  c.expect(alpha.coefficients == std::map<std::string, Scalar>{{"k12", Scalar(1)}}, "alpha is k12 = 1");
  c.expect(hurewicz_vanishes(M, alpha), "Hurewicz image vanishes");
  const AttachmentModel Ma = build_attachment(M, alpha);
  c.expect(!u_class(Ma).is_zero(), "u is nonzero");
  c.equal(attachment_cohomology(Ma, 6).dimension(), std::size_t{1}, "dim H^6");
  c.expect(!is_u_decomposable(Ma).decomposable, "u is indecomposable");
  const FormalityVerdict v = formality_verdict(M, alpha);
  c.equal(to_string(v.status), std::string("NotFormal"), "status");
  c.equal(v.clause, std::string("indecomposable"), "clause");
}

void square_free_example(Check& c) {
  const BigradedModel M = testkit::model_of_fixture("ex3.1");
  for (int i = 1; i <= 3; ++i) {
    const std::string s = std::to_string(i);
    c.equal(d_of(M, "v" + s), "x" + s + "^2", "d v" + s);
    for (int j = 1; j <= 3; ++j) c.equal(d_of(M, "w" + s + std::to_string(j)), "a" + s + "*x" + std::to_string(j), "d w");
  }
  c.equal(d_of(M, "z"), std::string("x1*x2*x3"), "d z");
  const AlphaFunctional alpha = testkit::alpha_of_fixture("ex3.1");
  const AttachmentModel Ma = build_attachment(M, alpha);
  const auto h6 = attachment_cohomology(Ma, 6);
  const Cochain target{parse_element(M.generators(), "-x1*x2*x3"), 0};
  c.equal(u_class(Ma).coordinates, h6.coordinates(target), "u = -[x1*x2*x3]");
  const Specialness s = is_special(M, alpha);
  c.expect(!s.special, "alpha is not special");
  bool stage3_deg5 = false;
  for (const auto& name : s.violators) {
    const auto& g = M.generators()[M.generators().id_of(name)];
    stage3_deg5 = stage3_deg5 || (g.stage == 3 && g.degree == 5);
  }
  c.expect(stage3_deg5, "a stage-3 degree-5 violator");
  const FormalityVerdict v = formality_verdict(M, alpha);
  c.equal(to_string(v.status), std::string("Inconclusive"), "status");
}

void zero_alpha(Check& c) {
  for (const auto& f : fixtures()) {
    const JobSpec job = parse_job(f.job);
    const BigradedModel M = testkit::model_of_job(f.job);
    const int n = job.attachments.empty() ? M.truncation() : *job.attachments[0].cell;
    const AlphaFunctional zero{n, {}};
    const FormalityVerdict v = formality_verdict(M, zero);
    c.equal(to_string(v.status), std::string("Formal"), f.id + " status");
    c.equal(v.clause, std::string("torsion"), f.id + " clause");
    const AttachmentModel Ma = build_attachment(M, zero);
    c.equal(attachment_cohomology(Ma, n).dimension(), M.algebra.dimension(n) + 1, f.id + " dim H^n");
  }
  // the even-cell procedure with a zero cell
  const PresentedAlgebra A = testkit::algebra({{"a1", 2}, {"a2", 2}}, {"a1^2", "a2^2"}, 4);
  const EvenComplexResult r = even_complex_formality(A, 1, {{4, {}}});
  c.equal(r.steps.at(0).verdict.clause, std::string("torsion"), "even-cell zero alpha clause");
  const AttachmentModel Ma = build_attachment(r.skeleton_model, r.steps.at(0).alpha);
  c.equal(attachment_cohomology(Ma, 4).dimension(), r.skeleton_model.algebra.dimension(4) + 1,
          "even-cell zero alpha dim H^4");
  c.equal(r.final_dimensions.at(4), attachment_cohomology(Ma, 4).dimension(), "even-cell final dim H^4");
}

void hurewicz_nonvanishing(Check& c) {
  int done = 0;
  for (int seed = 0; done < 200 && seed < 5000; ++seed) {
    Rng rng(8000 + seed);
    const BigradedModel M = testkit::random_model(rng);
    std::vector<int> cells;
    for (int n = 3; n <= M.truncation(); ++n) {
      const auto s0 = testkit::generators_where(M, [&](const Generator& g) { return g.stage == 0 && g.degree == n - 1; });
      if (!s0.empty()) cells.push_back(n);
    }
    if (cells.empty()) continue;
    const int n = testkit::pick(rng, cells);
    AlphaFunctional alpha{n, {}};
    for (const GenId g : testkit::generators_where(M, [&](const Generator& x) { return x.stage == 0 && x.degree == n - 1; })) {
      if (testkit::coin(rng)) alpha.coefficients[M.generators()[g].name] = testkit::random_nonzero(rng);
    }
    if (alpha.is_zero()) continue;
    ++done;
    const AttachmentModel Ma = build_attachment(M, alpha);
    const std::string tag = "seed " + std::to_string(8000 + seed);
    c.expect(u_class(Ma).is_zero(), tag + ": u is zero");
    c.equal(attachment_cohomology(Ma, n - 1).dimension() + 1, M.algebra.dimension(n - 1), tag + ": dim H^(n-1) + 1");
  }
  c.equal(done, 200, "cases run");
}

void projective_plane(Check& c) {
  const BigradedModel M = testkit::model_of_fixture("cp2-attach");
  const AlphaFunctional alpha = testkit::alpha_of_fixture("cp2-attach");
  const FormalityVerdict v = formality_verdict(M, alpha);
  c.equal(to_string(v.status), std::string("Formal"), "status");
  c.equal(v.clause, std::string("special-decomposable"), "clause");
  c.equal(v.witness.value("decomposition", std::string()), std::string("-[a]*[a]"), "witness");
  const AttachmentModel Ma = build_attachment(M, alpha);
  // by hand: d_alpha(b) = a^2 + u, so [u] = -[a]^2 spans H^4
  const Cochain db = Ma.complex().d(Cochain{parse_element(M.generators(), "b"), 0});
  c.equal(to_string(M.generators(), db.lambda), std::string("a^2"), "d_alpha b, model part");
  c.equal(db.u, Scalar(1), "d_alpha b, u part");
  const std::vector<std::size_t> expected = {1, 0, 1, 0, 1};
  c.equal(attachment_dims(Ma, 4), expected, "dims");
  // Q[a]/(a^3) has no relations through degree 4
  const PresentedAlgebra cp2 = testkit::algebra({{"a", 2}}, {}, 4);
  std::vector<std::size_t> oracle_dims;
  for (int m = 0; m <= 4; ++m) oracle_dims.push_back(cp2.dimension(m));
  c.equal(attachment_dims(Ma, 4), oracle_dims, "dims vs Q[a]/(a^3)");
  const oracle::Dgca O = oracle::from_model(M, &alpha);
  c.expect(oracle::analyze_u(O).decomposable, "oracle finds u decomposable");
}

void even_cells(Check& c) {
  const JobSpec job = parse_job(testkit::fixture("even-4k").job);
  const PresentedAlgebra A = job_algebra(job, *job.truncation);
  const EvenComplexResult r = even_complex_formality(A, *job.even_k, {job_alpha(job.attachments[0])});
  c.equal(to_string(r.overall.status), std::string("Formal"), "status");
  c.equal(r.final_dimensions.at(2), std::size_t{2}, "dim H^2");
  c.equal(r.final_dimensions.at(4), std::size_t{1}, "dim H^4");
  const auto& P = r.final_presentation;
  const Element a1a2 = parse_element(P.generators(), "a1*a2");
  c.expect(!P.reduce(a1a2).is_zero(), "a1*a2 spans H^4");
  // independent count: the skeleton model's H^4 with the cell attached
  const AttachmentModel Ma = build_attachment(r.skeleton_model, r.steps.at(0).alpha);
  c.equal(attachment_dims(Ma, 4), std::vector<std::size_t>{1, 0, 2, 0, 1}, "attachment dims");
}

void properties(Check& c) {
  for (const auto& p : testkit::all_properties()) {
    c.expect(p.cases >= 200, p.name + ": only " + std::to_string(p.cases) + " cases");
    c.expect(p.ok(), p.name + ": " + std::to_string(p.failures) + " failures, first " + p.first_failure);
  }
}

void decomposability_oracle(Check& c) {
  auto compare = [&](const BigradedModel& M, const AlphaFunctional& alpha, const std::string& tag) {
    const AttachmentModel Ma = build_attachment(M, alpha);
    const oracle::Dgca O = oracle::from_model(M, &Ma.alpha);
    const oracle::UReport o = oracle::analyze_u(O);
    c.equal(o.u_nonzero, !u_class(Ma).is_zero(), tag + ": u nonzero");
    if (o.u_nonzero) c.equal(is_u_decomposable(Ma).decomposable, o.decomposable, tag + ": decomposable");
  };
  for (const auto* id : {"ex3.1", "ex3.2", "cp2-attach"}) {
    const BigradedModel M = testkit::model_of_fixture(id);
    const AlphaFunctional alpha = testkit::alpha_of_fixture(id);
    compare(M, alpha, id);
    compare(M, {alpha.cell, {}}, std::string(id) + " zero");
  }
  const JobSpec job = parse_job(testkit::fixture("even-4k").job);
  const EvenComplexResult r =
      even_complex_formality(job_algebra(job, *job.truncation), *job.even_k, {job_alpha(job.attachments[0])});
  compare(r.skeleton_model, r.steps.at(0).alpha, "even-4k");
  const BigradedModel wedge = testkit::model_of_fixture("wedge3-s2");
  compare(wedge, {5, {{"c12", Scalar(1)}}}, "wedge3-s2 c12");
  compare(wedge, {5, {}}, "wedge3-s2 zero");
  compare(testkit::model_of_fixture("cp1"), {4, {}}, "cp1 zero");

  int done = 0;
  for (int seed = 0; done < 50 && seed < 5000; ++seed) {
    Rng rng(9000 + seed);
    const BigradedModel M = testkit::random_model(rng);
    const int n = testkit::random_cell(rng, M);
    if (n == 0) continue;
    const AlphaFunctional alpha = testkit::random_alpha(rng, M, n);
    if (u_class(build_attachment(M, alpha)).is_zero()) continue;
    ++done;
    compare(M, alpha, "seed " + std::to_string(9000 + seed));
  }
  c.equal(done, 50, "random models with u nonzero");
}

struct Criterion {
  std::string id;
  std::string description;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "wedge of three 2-spheres: model shape and quasi-isomorphism", wedge_model},
      {"AC2", "wedge with a 6-cell along k12 is not formal", wedge_with_cell},
      {"AC3", "square-free example: differentials, u, non-special, inconclusive", square_free_example},
      {"AC4", "zero alpha is formal with one extra class in degree n", zero_alpha},
      {"AC5", "stage-0 support kills u and drops dim H^(n-1) by one", hurewicz_nonvanishing},
      {"AC6", "2-sphere with a 4-cell is formal with u = -[a]*[a]", projective_plane},
      {"AC7", "even cells of dimension 4k over degree-2k classes are formal", even_cells},
      {"AC8", "randomized property suites, at least 200 cases each", properties},
      {"AC9", "decomposability agrees with brute-force products of cocycles", decomposability_oracle},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = c.failures().empty();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << cr.id << " " << cr.description << "\n";
    for (std::size_t i = 0; i < c.failures().size() && i < 10; ++i) std::cout << "    " << c.failures()[i] << "\n";
    if (!ok) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
