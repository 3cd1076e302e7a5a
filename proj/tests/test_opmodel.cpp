#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <string>

#include <diagcat/errors.hpp>
#include <diagcat/opmodel.hpp>
#include <diagcat/opmodel_io.hpp>

using diagcat::AlgebraState;
using diagcat::BetaOmegaFormResult;
using diagcat::BlockElement;
using diagcat::CanonicalRestrictionResult;
using diagcat::DeltaFormResult;
using diagcat::Inclusion;
using diagcat::ModelFile;
using diagcat::MultiMatrixAlgebra;
using diagcat::OperatorModel;
using diagcat::Rational;
using diagcat::block_adjoint;
using diagcat::block_identity;
using diagcat::block_mul;
using diagcat::block_zero;
using diagcat::build_operator_model;
using diagcat::canonical_trace;
using diagcat::check_canonical_restriction;
using diagcat::embed_element;
using diagcat::gns_basis;
using diagcat::is_beta_omega_form;
using diagcat::is_delta_form;
using diagcat::kron;
using diagcat::load_model;
using diagcat::load_model_file;
using diagcat::modular_automorphism;
using diagcat::restrict_state;
using diagcat::state_value;

namespace {

std::string fixture(const std::string& name) {
  return std::string(DIAGCAT_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("multimatrix dimensions") {
  MultiMatrixAlgebra a{{1, 2, 3}};
  CHECK(a.dim() == 1 + 4 + 9);
  CHECK(a.block_count() == 3);
  CHECK_NOTHROW(a.validate());
  MultiMatrixAlgebra bad{{1, 0}};
  CHECK_THROWS_AS(bad.validate(), diagcat::Error);
  MultiMatrixAlgebra empty{{}};
  CHECK_THROWS_AS(empty.validate(), diagcat::Error);
}

TEST_CASE("canonical trace is a delta form with delta^2 = dim") {
  for (const MultiMatrixAlgebra& a :
       {MultiMatrixAlgebra{{1, 1}}, MultiMatrixAlgebra{{2}},
        MultiMatrixAlgebra{{1, 2}}, MultiMatrixAlgebra{{2, 3, 1}}}) {
    CAPTURE(a.dim());
    const AlgebraState s = canonical_trace(a);
    const DeltaFormResult r = is_delta_form(a, s);
    CHECK(r.ok);
    CHECK(r.delta2 == doctest::Approx(a.dim()).epsilon(1e-12));
    CHECK(r.block_spread <= 1e-10);
    CHECK(r.mult_residual <= 1e-10);
  }
}

TEST_CASE("an uneven state is not a delta form") {
  MultiMatrixAlgebra a{{1, 1}};
  AlgebraState s;
  s.q.push_back(Eigen::MatrixXd::Constant(1, 1, 0.3));
  s.q.push_back(Eigen::MatrixXd::Constant(1, 1, 0.7));
  CHECK_NOTHROW(s.validate(a));
  const DeltaFormResult r = is_delta_form(a, s);
  CHECK_FALSE(r.ok);
  CHECK(r.block_spread > 0.5);
}

TEST_CASE("state validation") {
  MultiMatrixAlgebra a{{2}};
  AlgebraState wrong_shape;
  wrong_shape.q.push_back(Eigen::MatrixXd::Identity(1, 1));
  CHECK_THROWS_AS(wrong_shape.validate(a), diagcat::Error);

  AlgebraState asym;
  Eigen::MatrixXd q(2, 2);
  q << 0.5, 0.2, 0.1, 0.5;
  asym.q.push_back(q);
  CHECK_THROWS_AS(asym.validate(a), diagcat::Error);

  AlgebraState indef;
  Eigen::MatrixXd neg(2, 2);
  neg << 1.0, 0.0, 0.0, -0.5;
  indef.q.push_back(neg);
  CHECK_THROWS_AS(indef.validate(a), diagcat::Error);
}

TEST_CASE("inclusion validation") {
  Inclusion good{{{1}}, {{2}}, {{2}}};
  CHECK_NOTHROW(good.validate());
  // Non-unital: one copy of a 1-dim block cannot fill a 2-dim corner.
  Inclusion nonunital{{{1}}, {{2}}, {{1}}};
  CHECK_THROWS_AS(nonunital.validate(), diagcat::Error);
  Inclusion ragged{{{1, 1}}, {{2}}, {{2}}};
  CHECK_THROWS_AS(ragged.validate(), diagcat::Error);
}

TEST_CASE("embedding stacks diagonal copies") {
  const ModelFile mf = load_model_file(fixture("c_in_m2_canonical.json"));
  BlockElement x;
  x.push_back(Eigen::MatrixXd::Constant(1, 1, 3.0));
  const BlockElement emb = embed_element(mf.inclusion, x);
  REQUIRE(emb.size() == 1);
  CHECK(emb[0].isApprox(3.0 * Eigen::MatrixXd::Identity(2, 2)));

  // Unit maps to unit.
  const BlockElement one_b = block_identity(mf.inclusion.b);
  const BlockElement one_d = block_identity(mf.inclusion.d);
  const BlockElement eone = embed_element(mf.inclusion, one_b);
  CHECK(eone[0].isApprox(one_d[0]));
}

TEST_CASE("gns basis is orthonormal") {
  const ModelFile mf = load_model_file(fixture("b_in_bw.json"));
  const auto basis = gns_basis(mf.inclusion.d, mf.state);
  const int n = static_cast<int>(basis.size());
  CHECK(n == mf.inclusion.d.dim());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v =
          state_value(mf.state, block_mul(block_adjoint(basis[i]), basis[j]));
      CHECK(std::abs(v - (i == j ? 1.0 : 0.0)) <= 1e-12);
    }
  }
}

TEST_CASE("modular automorphism") {
  // Canonical traces are tracial: sigma is the identity.
  MultiMatrixAlgebra a{{2, 1}};
  const AlgebraState s = canonical_trace(a);
  BlockElement x = block_zero(a);
  x[0] << 1.0, 2.0, 3.0, 4.0;
  x[1] << 5.0;
  const BlockElement sx = modular_automorphism(s, x);
  CHECK(sx[0].isApprox(x[0]));
  CHECK(sx[1].isApprox(x[1]));

  // For a non-tracial state phi(x y) = phi(y sigma(x)).
  AlgebraState skew;
  Eigen::MatrixXd q(2, 2);
  q << 0.7, 0.0, 0.0, 0.3;
  skew.q.push_back(q);
  skew.q.push_back(Eigen::MatrixXd::Constant(1, 1, 0.5));
  BlockElement y = block_zero(a);
  y[0] << 0.0, 1.0, -1.0, 2.0;
  y[1] << 1.5;
  const double lhs = state_value(skew, block_mul(x, y));
  const double rhs =
      state_value(skew, block_mul(y, modular_automorphism(skew, x)));
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("beta omega forms of the product models") {
  struct Case {
    const char* file;
    double beta2;
    double omega2;
  };
  for (const Case& c : {Case{"c_in_c2.json", 1.0, 2.0},
                        Case{"c_in_c3.json", 1.0, 3.0},
                        Case{"c_in_c4.json", 1.0, 4.0},
                        Case{"c_in_c5.json", 1.0, 5.0},
                        Case{"c2_in_c4_product.json", 2.0, 2.0},
                        Case{"c_in_m2_canonical.json", 1.0, 4.0},
                        Case{"b_in_bw.json", 2.0, 4.0},
                        Case{"m2_in_m4_canonical.json", 4.0, 4.0}}) {
    CAPTURE(c.file);
    const ModelFile mf = load_model_file(fixture(c.file));
    const BetaOmegaFormResult r = is_beta_omega_form(mf.inclusion, mf.state);
    CHECK(r.ok);
    CHECK(r.beta2 == doctest::Approx(c.beta2).epsilon(1e-12));
    CHECK(r.omega2 == doctest::Approx(c.omega2).epsilon(1e-12));
    CHECK(r.delta2 == doctest::Approx(c.beta2 * c.omega2).epsilon(1e-12));
    CHECK(r.unit_residual <= 1e-10);
    CHECK(r.algebra_residual <= 1e-10);
  }
}

TEST_CASE("bad state fails certification") {
  const ModelFile mf = load_model_file(fixture("bad_state.json"));
  const BetaOmegaFormResult r = is_beta_omega_form(mf.inclusion, mf.state);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.on_d.ok);
}

TEST_CASE("canonical restriction criterion") {
  struct Case {
    const char* file;
    bool restricts;
    Rational index;
  };
  for (const Case& c :
       {Case{"c_in_m2_canonical.json", true, Rational(4)},
        Case{"b_in_bw.json", true, Rational(4)},
        Case{"m2_in_m4_canonical.json", true, Rational(4)},
        Case{"c_in_c2.json", true, Rational(2)},
        Case{"c2_in_c3_mult21.json", false, Rational(3, 2)}}) {
    CAPTURE(c.file);
    const ModelFile mf = load_model_file(fixture(c.file));
    const CanonicalRestrictionResult r =
        check_canonical_restriction(mf.inclusion);
    CHECK(r.restricts_to_canonical == c.restricts);
    CHECK(r.index == c.index);
  }
}

TEST_CASE("operator model structure") {
  const ModelFile mf = load_model_file(fixture("c2_in_c4_product.json"));
  const OperatorModel model = build_operator_model(mf.inclusion, mf.state);
  const int n = model.n;
  CHECK(n == 4);
  CHECK(model.delta2 == doctest::Approx(4.0));
  CHECK(model.beta2 == doctest::Approx(2.0));
  CHECK(model.omega2 == doctest::Approx(2.0));

  // M M^T = delta^2 I.
  const Eigen::MatrixXd mm = model.m_op * model.m_op.transpose();
  CHECK((mm - model.delta2 * Eigen::MatrixXd::Identity(n, n))
            .cwiseAbs()
            .maxCoeff() <= 1e-12);

  // The unit is a unit: M (U ox I) = I = M (I ox U).
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd left = model.m_op * kron(model.u_op, eye);
  const Eigen::MatrixXd right = model.m_op * kron(eye, model.u_op);
  CHECK((left - eye).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((right - eye).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(model.u_op.norm() == doctest::Approx(1.0));

  // E is the rank dim(B) orthogonal projection fixing U.
  const Eigen::MatrixXd& e = model.e_op;
  CHECK((e * e - e).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((e - e.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(e.trace() == doctest::Approx(mf.inclusion.b.dim()));
  CHECK((e * model.u_op - model.u_op).norm() <= 1e-12);
}

TEST_CASE("kron matches the blockwise definition") {
  Eigen::MatrixXd a(2, 2);
  a << 1, 2, 3, 4;
  Eigen::MatrixXd b(1, 2);
  b << 5, 6;
  const Eigen::MatrixXd k = kron(a, b);
  REQUIRE(k.rows() == 2);
  REQUIRE(k.cols() == 4);
  CHECK(k(0, 0) == 5);
  CHECK(k(0, 1) == 6);
  CHECK(k(0, 2) == 10);
  CHECK(k(1, 0) == 15);
  CHECK(k(1, 3) == 24);
}

TEST_CASE("model file parse errors") {
  CHECK_THROWS_AS(load_model("not json"), diagcat::ParseError);
  CHECK_THROWS_AS(load_model("[1,2]"), diagcat::ParseError);
  CHECK_THROWS_AS(load_model(R"({"B":{"blocks":[1]}})"), diagcat::ParseError);
  // Wrong number of state blocks.
  CHECK_THROWS_AS(load_model(R"({
    "B": {"blocks": [1]},
    "D": {"blocks": [1, 1]},
    "multiplicity": [[1], [1]],
    "state": {"Q": [[[1.0]]]}
  })"),
                  diagcat::ParseError);
  // Valid JSON, invalid inclusion: reported as a parse error too.
  CHECK_THROWS_AS(load_model(R"({
    "B": {"blocks": [1]},
    "D": {"blocks": [2]},
    "multiplicity": [[1]],
    "state": "canonical"
  })"),
                  diagcat::ParseError);
  CHECK_THROWS_AS(load_model_file(fixture("missing.json")),
                  diagcat::ParseError);
}

TEST_CASE("restrict state sums diagonal corners") {
  const ModelFile mf = load_model_file(fixture("c2_in_c4_product.json"));
  const AlgebraState sb = restrict_state(mf.inclusion, mf.state);
  REQUIRE(sb.q.size() == 2);
  CHECK(sb.q[0](0, 0) == doctest::Approx(0.5));
  CHECK(sb.q[1](0, 0) == doctest::Approx(0.5));
}
