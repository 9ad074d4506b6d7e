#include "polylab/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "polylab/error.hpp"

namespace polylab::io {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw InputError(std::string("expected an object holding '") + name + "'");
  const auto it = j.find(name);
  if (it == j.end()) throw InputError(std::string("missing field '") + name + "'");
  return *it;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + " must be a number");
  return j.get<double>();
}

int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

Json double_or_inf(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

Json exponent_json(const PExponent& p) {
  if (p.is_infinite()) return "inf";
  return p.value();
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real() + 0.0, z.imag() + 0.0}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InputError("complex numbers are encoded as [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const TracialAlgebra& algebra) {
  Json blocks = Json::array();
  for (const Block& b : algebra.blocks()) {
    Json jb;
    jb["dim"] = b.dim;
    jb["weight"] = b.weight;
    blocks.push_back(std::move(jb));
  }
  Json j;
  j["blocks"] = std::move(blocks);
  return j;
}

TracialAlgebra algebra_from_json(const Json& j) {
  if (j.is_object() && j.contains("algebra")) return algebra_from_json(j["algebra"]);
  const Json& blocks = field(j, "blocks");
  if (!blocks.is_array()) throw InputError("'blocks' must be an array");
  std::vector<Block> out;
  for (const Json& b : blocks) {
    out.push_back(Block{integer(field(b, "dim"), "dim"), number(field(b, "weight"), "weight")});
  }
  try {
    return TracialAlgebra(std::move(out));
  } catch (const StructuralError& e) {
    throw InputError(std::string("invalid algebra: ") + e.what());
  }
}

Json to_json(const Element& x) {
  Json blocks = Json::array();
  for (const Matrix& b : x.blocks()) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < b.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index k = 0; k < b.cols(); ++k) row.push_back(complex_to_json(b(i, k)));
      rows.push_back(std::move(row));
    }
    blocks.push_back(std::move(rows));
  }
  Json j;
  j["algebra"] = to_json(x.algebra());
  j["blocks"] = std::move(blocks);
  return j;
}

Element element_from_json(const Json& j) {
  const TracialAlgebra algebra = algebra_from_json(field(j, "algebra"));
  const Json& blocks = field(j, "blocks");
  if (!blocks.is_array() || blocks.size() != algebra.num_blocks())
    throw InputError("element 'blocks' must list one matrix per algebra block");
  std::vector<Matrix> mats;
  for (std::size_t k = 0; k < algebra.num_blocks(); ++k) {
    const int n = algebra.block(k).dim;
    const Json& rows = blocks[k];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
      std::ostringstream os;
      os << "element block " << k << " must have " << n << " rows";
      throw InputError(os.str());
    }
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
      const Json& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<int>(row.size()) != n) {
        std::ostringstream os;
        os << "element block " << k << " row " << i << " must have " << n << " entries";
        throw InputError(os.str());
      }
      for (int c = 0; c < n; ++c) m(i, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
    }
    mats.push_back(std::move(m));
  }
  return Element(algebra, std::move(mats));
}

Json to_json(const HomPolynomial& p) {
  Json j;
  j["m"] = p.degree();
  j["q"] = p.codomain().q();
  j["d"] = p.codomain().dimension();
  Json monos = Json::array();
  for (const TraceMonomial& mono : p.monomials()) {
    Json jm;
    jm["coeff"] = complex_to_json(mono.coeff);
    jm["coord"] = mono.coord;
    Json factors = Json::array();
    for (const Element& a : mono.factors) factors.push_back(to_json(a));
    jm["factors"] = std::move(factors);
    monos.push_back(std::move(jm));
  }
  j["monomials"] = std::move(monos);
  return j;
}

HomPolynomial polynomial_from_json(const Json& j, const std::optional<TracialAlgebra>& algebra) {
  const int m = integer(field(j, "m"), "m");
  const double q = j.contains("q") ? number(j["q"], "q") : 1.0;
  const int d = j.contains("d") ? integer(j["d"], "d") : 1;
  const Json& monos = field(j, "monomials");
  if (!monos.is_array()) throw InputError("'monomials' must be an array");

  std::vector<TraceMonomial> out;
  std::optional<TracialAlgebra> found = algebra;
  for (const Json& jm : monos) {
    TraceMonomial mono;
    mono.coeff = jm.contains("coeff") ? complex_from_json(jm["coeff"]) : Complex(1.0);
    mono.coord = jm.contains("coord") ? integer(jm["coord"], "coord") : 0;
    const Json& factors = field(jm, "factors");
    if (!factors.is_array()) throw InputError("'factors' must be an array");
    for (const Json& f : factors) {
      Element a = element_from_json(f);
      if (!found) found = a.algebra();
      if (!(a.algebra() == *found))
        throw InputError("polynomial factors disagree with the algebra");
      mono.factors.push_back(std::move(a));
    }
    out.push_back(std::move(mono));
  }
  if (!found) throw InputError("polynomial without monomials needs an explicit algebra");
  try {
    return HomPolynomial(m, QNormedCodomain(d, q), *found, std::move(out));
  } catch (const StructuralError& e) {
    throw InputError(std::string("invalid polynomial: ") + e.what());
  } catch (const UsageError& e) {
    throw InputError(std::string("invalid polynomial: ") + e.what());
  }
}

Json to_json(const SpectralData& s) {
  Json j = to_json(s.unitary);
  Json values = Json::array();
  for (const auto& block : s.eigenvalues) values.push_back(block);
  j["eigenvalues"] = std::move(values);
  return j;
}

Json to_json(const OAReport& report) {
  Json j;
  j["cone"] = to_string(report.cone);
  j["n_samples"] = report.n_samples;
  j["tol"] = report.tol;
  j["max_residual"] = report.max_residual;
  j["worst_sample"] = report.worst_sample;
  j["passed"] = report.passed;
  return j;
}

Json to_json(const RepresentationReport& report) {
  Json j;
  Json zeta = Json::array();
  for (const Element& z : report.zeta) zeta.push_back(to_json(z));
  j["zeta"] = std::move(zeta);
  j["max_residual"] = report.max_residual;
  j["uniqueness_gap"] = report.uniqueness_gap;
  Json norms;
  norms["p"] = report.norm_data.p;
  norms["m"] = report.norm_data.m;
  norms["r"] = exponent_json(report.norm_data.r);
  norms["per_coordinate"] = report.norm_data.per_coordinate;
  j["norms"] = std::move(norms);
  return j;
}

Json to_json(const CounterexampleWitness& w) {
  Json j;
  j["gadget"] = to_string(w.gadget);
  j["gadget_index"] = w.gadget_index;
  j["residual"] = w.residual;
  j["orth_residual"] = w.orth_residual;
  j["x"] = to_json(w.x);
  j["y"] = to_json(w.y);
  return j;
}

Json to_json(const NormBounds& b) {
  Json j;
  j["lower_estimate"] = b.lower_estimate;
  j["upper_bound"] = double_or_inf(b.upper_bound);
  j["sandwich_ok"] = b.sandwich_ok;
  return j;
}

Json to_json(const ZeroCertificate& c) {
  Json j;
  j["vanishes_on_positives"] = c.vanishes_on_positives;
  if (c.vanishes_globally) j["vanishes_globally"] = *c.vanishes_globally;
  else j["vanishes_globally"] = nullptr;
  j["worst_positive"] = double_or_inf(c.worst_positive);
  j["worst_general"] = double_or_inf(c.worst_general);
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

}  // namespace polylab::io
