#include <doctest.h>

#include <cmath>

#include "fockideal/family.hpp"
#include "fockideal/verify.hpp"

using namespace fockideal;

namespace {
AtomicMeasure unit_atom() { return AtomicMeasure(1, {Atom{ComplexPoint::zero(1), 1.0}}); }
}  // namespace

TEST_CASE("domination constants") {
  CHECK(domination_constant_stated(1, 1.0, 1.0) == doctest::Approx(std::exp(std::sqrt(2.0))));
  CHECK(domination_constant_stated(1, 1.0, 1.0) == doctest::Approx(4.113250378782927).epsilon(1e-12));
  CHECK(domination_constant_safe(1, 1.0, 1.0) == doctest::Approx(std::exp(2.0)));
  CHECK(domination_constant_safe(2, 0.5, 2.0) == doctest::Approx(std::exp(2.0)));
}

TEST_CASE("heat domination on concentrated measures") {
  // The derivable constant exp(2n a r^2) never loses; at the origin with the
  // atom in the ball both sides are within the constant trivially.
  const auto rep = check_heat_domination(unit_atom(), 1.0, 1.0, 500, 7);
  CHECK(rep.samples > 500);
  CHECK(rep.pass_safe());
  CHECK(rep.max_ratio <= rep.constant_safe * (1 + 1e-12));

  // A witness near a box corner beats the smaller stated constant: the mass
  // sits at sup distance < 1 but Euclidean distance^2 close to 2.
  const AtomicMeasure corner(1, {Atom{ComplexPoint({{0.97, 0.97}}), 1.0}});
  const double hat = box_mass(Measure(corner), 1.0, ComplexPoint::zero(1));
  const double heat = heat_transform(Measure(corner), 1.0, ComplexPoint::zero(1));
  CHECK(hat == 1.0);
  CHECK(hat > domination_constant_stated(1, 1.0, 1.0) * heat);
  CHECK(hat <= domination_constant_safe(1, 1.0, 1.0) * heat);
}

TEST_CASE("series constant for the sandwich") {
  // Partial-sum oracle at n=1, s=1, alpha=1, rho=1:
  // C = e^4 * sum (2m+1)^2 e^{-(m-2)^2}.
  double sum = 0.0;
  for (int m = 0; m < 60; ++m)
    sum += (2.0 * m + 1.0) * (2.0 * m + 1.0) * std::exp(-(m - 2.0) * (m - 2.0));
  const double oracle = std::exp(4.0) * sum;
  const auto c = sandwich_series_constant(1, 1.0, 1.0, 1.0);
  CHECK(c.value == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(c.error <= 1e-12 * c.value);
}

TEST_CASE("sandwich on the unit atom") {
  const auto rep = berezin_sandwich(unit_atom(), 1.0, 1.0, 1.0, 1.0,
                                    NormingFunction::power_sum(1.0));
  CHECK(rep.pass());
  // L = e^{-2}, M = theta(1)^2, U = C.
  CHECK(rep.lower.value == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
  CHECK(rep.middle.value == doctest::Approx(3.142243).epsilon(1e-5));
  CHECK(rep.upper.value == doctest::Approx(rep.series_constant).epsilon(1e-10));
}

TEST_CASE("sandwich for the zero measure") {
  const AtomicMeasure zero(1, {});
  const auto rep = berezin_sandwich(zero, 1.0, 1.0, 1.0, 1.0, NormingFunction::power_sum(2.0));
  CHECK(rep.pass());
  CHECK(rep.lower.value == 0.0);
  CHECK(rep.middle.value == 0.0);
  CHECK(rep.upper.value == 0.0);
}

TEST_CASE("sandwich across a small grid including dimension two") {
  const auto fam = seeded_atomic_family(5, 2, 2, 3, 1.0);
  for (const auto& nu : fam) {
    for (double s : {0.5, 1.0}) {
      const auto rep = berezin_sandwich(nu, 1.0, 1.0, 1.0, s, NormingFunction::lorentz());
      CHECK(rep.pass());
    }
  }
}

TEST_CASE("main chain") {
  SUBCASE("single atom at the origin has unit ratio") {
    for (double s : {0.5, 1.0}) {
      for (const auto& phi : {NormingFunction::power_sum(1.0), NormingFunction::sup_norm(),
                              NormingFunction::ky_fan(5), NormingFunction::lorentz()}) {
        const auto rep = main_chain(unit_atom(), 1.0, s, 1.0, phi, "unit");
        CHECK(rep.all_finite);
        CHECK(rep.ratio_op_box == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }
  SUBCASE("homogeneity in the symbol") {
    const auto fam = seeded_atomic_family(11, 1, 1, 6, 1.5);
    const auto& base = fam.front();
    const double s = 0.5;
    const auto phi = NormingFunction::power_sum(2.0);
    const auto ref = main_chain(base, 1.0, s, 1.0, phi);
    const auto scaledrep = main_chain(base.scaled(2.0), 1.0, s, 1.0, phi);
    const double cs = std::pow(2.0, s);
    CHECK(scaledrep.op_phi.value == doctest::Approx(cs * ref.op_phi.value).epsilon(1e-11));
    CHECK(scaledrep.box_seq_phi.value ==
          doctest::Approx(cs * ref.box_seq_phi.value).epsilon(1e-11));
    CHECK(scaledrep.heat_seq_phi.value ==
          doctest::Approx(cs * ref.heat_seq_phi.value).epsilon(1e-11));
  }
  SUBCASE("rejects out-of-range powers") {
    CHECK_THROWS_AS(main_chain(unit_atom(), 1.0, 0.0, 1.0, NormingFunction::power_sum(1.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(main_chain(unit_atom(), 1.0, 1.5, 1.0, NormingFunction::power_sum(1.0)),
                    std::invalid_argument);
  }
}

TEST_CASE("partition subadditivity") {
  SUBCASE("atom at a lattice point: equality") {
    const AtomicMeasure nu(1, {Atom{ComplexPoint::zero(1), 2.0}});
    const auto rep = partition_subadditivity(nu, 1.0, 2, 1.0, NormingFunction::power_sum(2.0));
    CHECK(rep.pass());
    CHECK(rep.full_phi == doctest::Approx(rep.class_phi_sum).epsilon(1e-13));
  }
  SUBCASE("random measures, several norms and factors") {
    for (const auto& nu : seeded_atomic_family(19, 3, 1, 10, 2.0)) {
      for (int m : {2, 3}) {
        for (double s : {0.5, 1.0}) {
          const auto rep =
              partition_subadditivity(nu, 1.0, m, s, NormingFunction::power_sum(2.0));
          CHECK(rep.pass());
        }
      }
      // Additivity of the summing norm over disjoint classes.
      const auto rep = partition_subadditivity(nu, 1.0, 2, 1.0, NormingFunction::power_sum(1.0));
      CHECK(rep.full_phi == doctest::Approx(rep.class_phi_sum).epsilon(1e-11));
    }
  }
}

TEST_CASE("report rows and formats") {
  const auto chain = main_chain(unit_atom(), 1.0, 1.0, 1.0, NormingFunction::power_sum(1.0), "m1");
  const auto dom = check_heat_domination(unit_atom(), 1.0, 1.0, 10, 3);
  std::vector<ReportRow> rows{to_row(chain, "chain-1"), to_row(dom, "dom-1")};
  const std::string csv = to_csv(rows);
  CHECK(csv.find("scenario_id,theorem,n,r,rho,gamma,alpha,s,phi,lhs,mid,rhs,constant,ratio,"
                 "verdict,err_cert") == 0);
  CHECK(csv.find("chain-1,chain,1,1,") != std::string::npos);
  CHECK(csv.find("dom-1,domination,1,") != std::string::npos);
  // Identical inputs produce identical bytes.
  CHECK(to_csv(rows) == csv);
  const std::string st = to_structured_text(rows);
  CHECK(st.find("scenario: chain-1") != std::string::npos);
  CHECK(st.find("verdict:") != std::string::npos);
  CHECK(format_value(1.0) == "1");
  CHECK(format_value(0.1) == "0.10000000000000001");
  CHECK(format_value(std::numeric_limits<double>::quiet_NaN()) == "");
}
