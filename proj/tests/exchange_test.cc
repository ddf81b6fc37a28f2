// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "depspace/exchange.h"

#include "depspace/bases.h"
#include "depspace/error.h"
#include "depspace/instances.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace depspace {
namespace {

using testing::Cliques;
using testing::P3Graph;
using testing::Space1;

TEST(SteinitzExchangeTest, Space1) {
  const auto s = Space1();
  const auto cert =
      SteinitzExchange(s, s.SetOf({"a", "b", "d"}), s.SetOf({"c"}));
  EXPECT_EQ(cert.removed, s.SetOf({"b"}));
  EXPECT_EQ(cert.result, s.SetOf({"a", "c", "d"}));
  EXPECT_TRUE(VerifyExchange(s, cert));
}

TEST(SteinitzExchangeTest, Cliques) {
  const auto c = Cliques();
  const auto cert = SteinitzExchange(c, c.SetOf({"1", "3"}), c.SetOf({"2"}));
  EXPECT_EQ(cert.removed, c.SetOf({"1"}));
  EXPECT_EQ(cert.result, c.SetOf({"2", "3"}));
  EXPECT_TRUE(VerifyExchange(c, cert));
}

TEST(SteinitzExchangeTest, BasisWithItselfRemovesNothing) {
  for (const auto& s : {Space1(), Cliques(), P3Graph()}) {
    for (const auto& basis : EnumerateBases(s).sets) {
      const auto cert = SteinitzExchange(s, basis, basis);
      EXPECT_TRUE(cert.removed.Empty());
      EXPECT_EQ(cert.result, basis);
    }
  }
}

TEST(SteinitzExchangeTest, Errors) {
  const auto s = Space1();
  try {
    SteinitzExchange(s, s.SetOf({"a", "d"}), ElementSet());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotABasis);
  }
  try {
    SteinitzExchange(s, s.SetOf({"a", "b", "d"}), s.SetOf({"a", "b", "c"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotIndependent);
  }
}

// Without transitivity the exchange still runs but the result need not be a
// basis: exchanging {x} into basis {a} of the path leaves b unreachable.
TEST(SteinitzExchangeTest, IntransitiveSpaceYieldsUnverifiedCertificate) {
  const auto p = P3Graph();
  const auto cert = SteinitzExchange(p, p.SetOf({"a"}), p.SetOf({"x"}));
  EXPECT_EQ(cert.result, p.SetOf({"x"}));
  EXPECT_EQ(cert.removed, p.SetOf({"a"}));
  EXPECT_FALSE(VerifyExchange(p, cert));
}

TEST(VerifyExchangeTest, NotMaximal) {
  const auto c = Cliques();
  ExchangeCertificate cert{c.SetOf({"1", "3"}), c.SetOf({"2"}),
                           c.SetOf({"1", "3"}), c.SetOf({"2"})};
  EXPECT_FALSE(VerifyExchange(c, cert));
}

TEST(VerifyExchangeTest, Malformed) {
  const auto s = Space1();
  auto cert = SteinitzExchange(s, s.SetOf({"a", "b", "d"}), s.SetOf({"c"}));
  auto tampered = cert;
  tampered.removed = s.SetOf({"c"});
  try {
    VerifyExchange(s, tampered);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedCertificate);
  }
  tampered = cert;
  tampered.result = s.SetOf({"a", "d"});
  EXPECT_THROW(VerifyExchange(s, tampered), Error);
}

// On transitive spaces every exchange verifies; the certificate identities
// always hold and repeated runs agree.
TEST(ExchangePropertyTest, TransitiveSpacesAlwaysVerify) {
  int transitive = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const std::size_t n = 2 + seed % 5;
    const std::size_t pairs = n * (n - 1) / 2;
    const auto s = RandomSpace(n, seed % std::min<std::size_t>(4, pairs + 1),
                               2 + seed % 3, seed);
    const testing::Oracle oracle(s);
    const bool axiom = oracle.Transitive();
    transitive += axiom;
    for (const auto& a : EnumerateBases(s).sets) {
      for (const auto& b : EnumerateIndependent(s).sets) {
        const auto cert = SteinitzExchange(s, a, b);
        ASSERT_EQ(cert, SteinitzExchange(s, a, b));
        ASSERT_TRUE(cert.removed.IsSubsetOf(a));
        ASSERT_TRUE(b.IsSubsetOf(cert.result));
        ASSERT_TRUE(cert.result.IsSubsetOf(a.Union(b)));
        const bool ok = VerifyExchange(s, cert);
        if (axiom) ASSERT_TRUE(ok) << "seed " << seed;
      }
    }
  }
  EXPECT_GT(transitive, 10);
}

}  // namespace
}  // namespace depspace
