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

#ifndef DEPSPACE_EXCHANGE_H_
#define DEPSPACE_EXCHANGE_H_

#include "depspace/element_set.h"
#include "depspace/space.h"

namespace depspace {

// Outcome of exchanging an independent set into a basis: `removed` is the
// part of the basis given up, and result = independent + (basis - removed).
struct ExchangeCertificate {
  ElementSet basis;
  ElementSet independent;
  ElementSet removed;
  ElementSet result;

  friend bool operator==(const ExchangeCertificate&,
                         const ExchangeCertificate&) = default;
};

// Greedily extends `independent` to a maximal independent set inside
// basis + independent, scanning in ground-set order, and reports which basis
// elements were left out. When the space satisfies transitivity the result
// is a basis; when it does not the certificate is still produced and
// VerifyExchange says whether the result happens to be one.
//
// Throws kNotABasis, kNotIndependent, kForeignElement.
ExchangeCertificate SteinitzExchange(const DependenceSpace& space,
                                     const ElementSet& basis,
                                     const ElementSet& independent);

// True iff the result is independent, maximal inside basis + independent,
// and a basis of the space. Throws kMalformedCertificate when the set
// identities between the four fields do not hold.
bool VerifyExchange(const DependenceSpace& space,
                    const ExchangeCertificate& cert);

}  // namespace depspace

#endif  // DEPSPACE_EXCHANGE_H_
