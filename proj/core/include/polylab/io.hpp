#pragma once

// JSON formats shared by the library and the CLI. Complex numbers are
// always [re, im] pairs; object keys keep a fixed insertion order.

#include <filesystem>
#include <optional>

#include <nlohmann/json.hpp>

#include "polylab/algebra.hpp"
#include "polylab/polynomial.hpp"
#include "polylab/representation.hpp"
#include "polylab/rigidity.hpp"
#include "polylab/spectral.hpp"

namespace polylab::io {

using Json = nlohmann::ordered_json;

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

// {"blocks":[{"dim":n,"weight":w},...]}
Json to_json(const TracialAlgebra& algebra);
/// Accepts the bare algebra object or a document wrapping it under "algebra".
TracialAlgebra algebra_from_json(const Json& j);

// {"algebra":{...},"blocks":[[[ [re,im], ...row ], ...], ...]}
Json to_json(const Element& x);
Element element_from_json(const Json& j);

// {"m":2,"q":1.0,"d":1,"monomials":[{"coeff":[re,im],"coord":0,"factors":[...]}]}
Json to_json(const HomPolynomial& p);
/// The algebra is taken from the factors; `algebra` is required when there
/// are no monomials and must agree with the factors when given.
HomPolynomial polynomial_from_json(const Json& j,
                                   const std::optional<TracialAlgebra>& algebra = {});

Json to_json(const SpectralData& s);
Json to_json(const OAReport& report);
Json to_json(const RepresentationReport& report);
Json to_json(const CounterexampleWitness& witness);
Json to_json(const NormBounds& bounds);
Json to_json(const ZeroCertificate& cert);

/// Reads and parses a file. Throws InputError on I/O or syntax errors.
Json read_json_file(const std::filesystem::path& path);

}  // namespace polylab::io
