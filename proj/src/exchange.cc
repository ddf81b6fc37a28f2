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
#include "depspace/relations.h"

namespace depspace {

ExchangeCertificate SteinitzExchange(const DependenceSpace& space,
                                     const ElementSet& basis,
                                     const ElementSet& independent) {
  space.RequireMember(basis);
  space.RequireMember(independent);
  if (!IsBasis(space, basis)) {
    throw Error(ErrorCode::kNotABasis, "first argument is not a basis");
  }
  if (IsDependent(space, independent)) {
    throw Error(ErrorCode::kNotIndependent, "second argument is dependent");
  }
  ExchangeCertificate cert;
  cert.basis = basis;
  cert.independent = independent;
  cert.result = ExtendToMaximalIndependent(space, independent,
                                           basis.Union(independent));
  cert.removed = basis.Difference(cert.result);
  return cert;
}

bool VerifyExchange(const DependenceSpace& space,
                    const ExchangeCertificate& cert) {
  for (const ElementSet* set :
       {&cert.basis, &cert.independent, &cert.removed, &cert.result}) {
    space.RequireMember(*set);
  }
  if (!cert.removed.IsSubsetOf(cert.basis)) {
    throw Error(ErrorCode::kMalformedCertificate,
                "removed set is not inside the basis");
  }
  if (cert.result !=
      cert.independent.Union(cert.basis.Difference(cert.removed))) {
    throw Error(ErrorCode::kMalformedCertificate,
                "result differs from independent + (basis - removed)");
  }

  if (IsDependent(space, cert.result)) return false;
  const ElementSet pool = cert.basis.Union(cert.independent);
  bool maximal = true;
  pool.Difference(cert.result).ForEach([&](ElementId id) {
    if (maximal && !IsDependent(space, cert.result.With(id.index))) {
      maximal = false;
    }
  });
  return maximal && IsBasis(space, cert.result);
}

}  // namespace depspace
