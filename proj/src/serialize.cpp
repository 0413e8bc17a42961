#include "abels/serialize.hpp"

#include "abels/errors.hpp"

#include <sstream>

namespace abels {

Json to_json(const Lattice& l) {
  Json basis = Json::array();
  for (Eigen::Index j = 0; j < l.basis().cols(); ++j) {
    Json column = Json::array();
    for (Eigen::Index i = 0; i < l.basis().rows(); ++i) column.push_back(l.basis()(i, j).to_string());
    basis.push_back(std::move(column));
  }
  Json out;
  out["p"] = l.prime();
  out["dim"] = l.dim();
  out["basis"] = std::move(basis);
  return out;
}

Lattice lattice_from_json(const Json& j) {
  try {
    const auto p = j.at("p").get<std::int64_t>();
    const int dim = j.at("dim").get<int>();
    const Json& basis = j.at("basis");
    if (!basis.is_array() || basis.empty()) throw Error(ErrorKind::InvalidArgument, "basis must be a nonempty array");
    PMatrix m(dim, static_cast<Eigen::Index>(basis.size()));
    for (std::size_t c = 0; c < basis.size(); ++c) {
      if (basis[c].size() != static_cast<std::size_t>(dim)) {
        throw Error(ErrorKind::InvalidArgument, "basis column has the wrong length");
      }
      for (int r = 0; r < dim; ++r) {
        m(r, static_cast<Eigen::Index>(c)) = PScalar::parse(basis[c][static_cast<std::size_t>(r)].get<std::string>(), p);
      }
    }
    return Lattice::span(m, p);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed lattice JSON: ") + e.what());
  }
}

Json to_json(const Partition& partition) {
  Json out = Json::array();
  for (const auto& block : partition.blocks()) {
    Json b = Json::array();
    for (int i : block) b.push_back(i + 1);
    out.push_back(std::move(b));
  }
  return out;
}

Json to_json(const SignVector& s) { return s.to_string(); }

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(format_rational(v(i)));
  return out;
}

Json to_json(const DegreeHomology& h) {
  Json torsion = Json::array();
  for (const auto& t : h.torsion) torsion.push_back(t.str());
  Json out;
  out["k"] = h.k;
  out["betti"] = h.betti;
  out["torsion"] = std::move(torsion);
  return out;
}

Json to_json(const std::vector<DegreeHomology>& hs) {
  Json out = Json::array();
  for (const auto& h : hs) out.push_back(to_json(h));
  return out;
}

Json to_json(const BuildingComplex& x) {
  Json out;
  out["model"] = model_name(x.model);
  out["p"] = x.p;
  out["dim"] = x.dim;
  Json vertices = Json::array();
  for (const auto& v : x.vertices) vertices.push_back(to_json(v));
  out["vertices"] = std::move(vertices);
  Json simplices = Json::object();
  for (int k = 1; k <= x.complex.dimension(); ++k) simplices[std::to_string(k)] = x.complex.simplices(k);
  out["simplices"] = std::move(simplices);
  return out;
}

std::string to_dot(const BuildingComplex& x, const std::optional<HeightFunction>& h) {
  std::ostringstream out;
  out << "graph building {\n";
  out << "  // model=" << model_name(x.model) << " p=" << x.p << " dim=" << x.dim << "\n";
  for (std::size_t i = 0; i < x.vertices.size(); ++i) {
    const Lattice& v = x.vertices[i];
    out << "  v" << i << " [label=\"" << i << "\", retraction=\"";
    const auto rho = retraction(v);
    for (std::size_t j = 0; j < rho.size(); ++j) out << (j ? "," : "") << rho[j];
    out << "\"";
    if (h) {
      const auto value = x.model == Model::Quotient ? height(LatticeClass(v), *h) : height(v, *h);
      out << ", height=" << value;
    }
    out << "];\n";
  }
  for (const auto& e : x.complex.simplices(1)) out << "  v" << e[0] << " -- v" << e[1] << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace abels
