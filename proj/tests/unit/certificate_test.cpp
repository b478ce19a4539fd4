#include <gtest/gtest.h>

#include "cutsparse/generators.hpp"
#include "cutsparse/sampler.hpp"
#include "cutsparse/schemes.hpp"

namespace cutsparse {
namespace {

TEST(CheckCertificate, NiSchemeOnK4IsValid) {
  const SchemeResult r = lambda_ni_unweighted(complete_graph(4));
  const CertificateReport rep = check_certificate(complete_graph(4), r.lambda, r.certificate);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.cuts_checked, 7U);
  EXPECT_LE(rep.worst_overlap_ratio, 1.0L);
}

// G_0 = T_1 carries the only flow between the endpoints of bucket-0 edges;
// dropping it must surface pi-connectivity and containment violations.
TEST(CheckCertificate, CorruptedK4CertificateIsRejected) {
  const Graph g = complete_graph(4);
  SchemeResult r = lambda_ni_unweighted(g);
  ASSERT_FALSE(r.certificate.levels.empty());
  r.certificate.levels[0].multiplicity.clear();
  const CertificateReport rep = check_certificate(g, r.lambda, r.certificate);
  EXPECT_FALSE(rep.ok());
  EXPECT_FALSE(rep.pi_connectivity.empty());
  EXPECT_FALSE(rep.containment.empty());
  for (const PiViolation& v : rep.pi_connectivity) {
    EXPECT_EQ(v.level, 0);
    EXPECT_LT(v.flow, v.required);
  }
}

TEST(CheckCertificate, OverlapViolationIsReported) {
  const Graph g = complete_graph(4);
  SchemeResult r = lambda_ni_unweighted(g);
  // Inflate every level a hundredfold; connectivity survives, overlap cannot.
  for (CertificateLevel& level : r.certificate.levels) {
    for (auto& [e, mult] : level.multiplicity) mult *= 100;
  }
  const CertificateReport rep = check_certificate(g, r.lambda, r.certificate);
  EXPECT_TRUE(rep.pi_connectivity.empty());
  EXPECT_FALSE(rep.overlap.empty());
  EXPECT_GT(rep.worst_overlap_ratio, 1.0L);
}

TEST(CheckCertificate, SingleEdge) {
  Graph g(2);
  g.add_edge(0, 1, 1);
  for (Scheme s : {Scheme::ni, Scheme::step1, Scheme::setlambda, Scheme::decreasing,
                   Scheme::standard, Scheme::resistance, Scheme::strong}) {
    const SchemeResult r = compute_scheme(s, g);
    EXPECT_TRUE(check_certificate(g, r.lambda, r.certificate).ok()) << scheme_name(s);
  }
}

TEST(CheckCertificate, GuardAndShape) {
  const Graph big = cycle_graph(21);
  const SchemeResult r = lambda_step1(big);
  EXPECT_THROW(check_certificate(big, r.lambda, r.certificate), SizeGuardError);
  const Graph g = complete_graph(5);
  SchemeResult s = lambda_step1(g);
  s.certificate.levels.clear();
  EXPECT_THROW(check_certificate(g, s.lambda, s.certificate), std::invalid_argument);
}

}  // namespace
}  // namespace cutsparse
