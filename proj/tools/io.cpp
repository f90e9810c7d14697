// Copyright 2026 The boundent Authors
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

#include "boundent/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "boundent/errors.hpp"

namespace boundent::io {

namespace {

[[noreturn]] void format_error(const std::string& detail) { throw InvariantViolation("format", detail); }

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) format_error(where + " must be a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) format_error(where + " is missing \"" + key + "\"");
  return *it;
}

double number(const Json& v, const std::string& where) {
  if (!v.is_number()) format_error(where + " must be a number");
  return v.get<double>();
}

int integer(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) format_error(where + " must be an integer");
  return v.get<int>();
}

std::vector<double> number_row(const Json& v, std::size_t expected, const std::string& where) {
  if (!v.is_array() || v.size() != expected) {
    format_error(where + " must be an array of " + std::to_string(expected) + " numbers");
  }
  std::vector<double> out;
  out.reserve(expected);
  for (std::size_t i = 0; i < expected; ++i) out.push_back(number(v[i], where));
  return out;
}

Json complex_vector(std::span<const Complex> values) {
  Json re = Json::array();
  Json im = Json::array();
  for (const Complex& z : values) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  return Json{{"re", re}, {"im", im}};
}

std::vector<Complex> parse_complex_vector(const Json& v, std::size_t n, const std::string& where) {
  const auto re = number_row(field(v, "re", where), n, where + ".re");
  const auto im = number_row(field(v, "im", where), n, where + ".im");
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = {re[i], im[i]};
  return out;
}

Ket parse_qubit(const Json& v, const std::string& where) {
  return Ket(1, parse_complex_vector(v, 2, where));
}

Json matrix2_json(const Matrix2& m) {
  return Json{{"re", {{m.m[0].real(), m.m[1].real()}, {m.m[2].real(), m.m[3].real()}}},
              {"im", {{m.m[0].imag(), m.m[1].imag()}, {m.m[2].imag(), m.m[3].imag()}}}};
}

Matrix2 parse_matrix2(const Json& v, const std::string& where) {
  const Json& re = field(v, "re", where);
  const Json& im = field(v, "im", where);
  if (!re.is_array() || re.size() != 2 || !im.is_array() || im.size() != 2) {
    format_error(where + " needs 2x2 \"re\" and \"im\" arrays");
  }
  Matrix2 m;
  for (std::size_t r = 0; r < 2; ++r) {
    const auto rr = number_row(re[r], 2, where + ".re");
    const auto ii = number_row(im[r], 2, where + ".im");
    for (std::size_t c = 0; c < 2; ++c) m.m[2 * r + c] = {rr[c], ii[c]};
  }
  return m;
}

Sign parse_sign(const Json& v, const std::string& where) {
  if (v == "+") return Sign::plus;
  if (v == "-") return Sign::minus;
  format_error(where + " must be \"+\" or \"-\"");
}

}  // namespace

// ---------------------------------------------------------------- states

Json state_to_json(const DensityMatrix& rho) {
  Json re = Json::array();
  Json im = Json::array();
  for (std::size_t r = 0; r < rho.dim(); ++r) {
    Json row_re = Json::array();
    Json row_im = Json::array();
    for (std::size_t c = 0; c < rho.dim(); ++c) {
      row_re.push_back(rho(r, c).real());
      row_im.push_back(rho(r, c).imag());
    }
    re.push_back(std::move(row_re));
    im.push_back(std::move(row_im));
  }
  return Json{{"n_qubits", rho.n_qubits()}, {"matrix_re", std::move(re)}, {"matrix_im", std::move(im)}};
}

DensityMatrix state_from_json(const Json& doc) {
  const int n = integer(field(doc, "n_qubits", "state file"), "n_qubits");
  if (n < 1 || n > kMaxQubits) {
    format_error("n_qubits = " + std::to_string(n) + " outside 1.." + std::to_string(kMaxQubits));
  }
  const std::size_t dim = std::size_t{1} << n;
  const Json& re = field(doc, "matrix_re", "state file");
  const Json& im = field(doc, "matrix_im", "state file");
  if (!re.is_array() || re.size() != dim || !im.is_array() || im.size() != dim) {
    format_error("matrix_re and matrix_im must each have " + std::to_string(dim) + " rows");
  }
  std::vector<Complex> entries(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const auto rr = number_row(re[r], dim, "matrix_re row " + std::to_string(r));
    const auto ii = number_row(im[r], dim, "matrix_im row " + std::to_string(r));
    for (std::size_t c = 0; c < dim; ++c) entries[r * dim + c] = {rr[c], ii[c]};
  }
  return DensityMatrix::from_operator(ComplexOperator(n, std::move(entries)));
}

// ---------------------------------------------------------------- schemes

Json scheme_to_json(const MixingScheme& scheme) {
  Json branches = Json::array();
  for (const auto& b : scheme.branches) {
    Json source;
    if (const auto* g = std::get_if<GhzSource>(&b.source)) {
      source = {{"kind", "ghz"}, {"n_qubits", g->n_qubits}, {"sign", g->sign == Sign::plus ? "+" : "-"}};
    } else if (const auto* t = std::get_if<TwoPhotonSchmidtSource>(&b.source)) {
      source = {{"kind", "two_photon_schmidt"}, {"alpha", t->alpha}, {"beta", t->beta}};
    } else {
      const auto& s = std::get<SinglePhotonSource>(b.source);
      source = complex_vector(s.state.amplitudes());
      source["kind"] = "single_photon";
    }
    Json elements = Json::array();
    for (const auto& e : b.elements) {
      if (const auto* u = std::get_if<LocalUnitary>(&e)) {
        Json j{{"kind", "local_unitary"}, {"photon", u->photon}};
        j.update(matrix2_json(u->unitary));
        elements.push_back(std::move(j));
      } else {
        const auto& f = std::get<PartialPolarizer>(e);
        elements.push_back({{"kind", "partial_polarizer"}, {"photon", f.photon}, {"t_h", f.t_h}, {"t_v", f.t_v}});
      }
    }
    Json extras = Json::array();
    for (const auto& k : b.extra_photons) extras.push_back(complex_vector(k.amplitudes()));
    branches.push_back({{"p", b.p}, {"source", std::move(source)}, {"elements", std::move(elements)},
                        {"extra_photons", std::move(extras)}});
  }
  return Json{{"n_qubits", scheme.n_qubits}, {"branches", std::move(branches)}};
}

MixingScheme scheme_from_json(const Json& doc) {
  MixingScheme scheme;
  scheme.n_qubits = integer(field(doc, "n_qubits", "scheme"), "n_qubits");
  if (scheme.n_qubits < 1 || scheme.n_qubits > kMaxQubits) format_error("scheme n_qubits out of range");
  const Json& branches = field(doc, "branches", "scheme");
  if (!branches.is_array() || branches.empty()) format_error("scheme branches must be a non-empty array");
  for (std::size_t i = 0; i < branches.size(); ++i) {
    const std::string where = "branch " + std::to_string(i + 1);
    const Json& jb = branches[i];
    Branch b;
    b.p = number(field(jb, "p", where), where + ".p");
    if (b.p < 0.0) format_error(where + ".p must be >= 0");

    const Json& js = field(jb, "source", where);
    const Json& kind = field(js, "kind", where + ".source");
    if (kind == "ghz") {
      b.source = GhzSource{integer(field(js, "n_qubits", where + ".source"), where + ".source.n_qubits"),
                           parse_sign(field(js, "sign", where + ".source"), where + ".source.sign")};
    } else if (kind == "two_photon_schmidt") {
      b.source = TwoPhotonSchmidtSource{number(field(js, "alpha", where + ".source"), "alpha"),
                                        number(field(js, "beta", where + ".source"), "beta")};
    } else if (kind == "single_photon") {
      b.source = SinglePhotonSource{parse_qubit(js, where + ".source")};
    } else {
      format_error(where + ".source.kind must be ghz, two_photon_schmidt or single_photon");
    }

    if (const auto it = jb.find("elements"); it != jb.end()) {
      if (!it->is_array()) format_error(where + ".elements must be an array");
      for (const Json& je : *it) {
        const Json& ek = field(je, "kind", where + ".element");
        const int photon = integer(field(je, "photon", where + ".element"), where + ".element.photon");
        if (ek == "local_unitary") {
          b.elements.push_back(LocalUnitary{photon, parse_matrix2(je, where + ".element")});
        } else if (ek == "partial_polarizer") {
          b.elements.push_back(PartialPolarizer{photon, number(field(je, "t_h", where), "t_h"),
                                                number(field(je, "t_v", where), "t_v")});
        } else {
          format_error(where + ".element.kind must be local_unitary or partial_polarizer");
        }
      }
    }
    if (const auto it = jb.find("extra_photons"); it != jb.end()) {
      if (!it->is_array()) format_error(where + ".extra_photons must be an array");
      for (const Json& jp : *it) b.extra_photons.push_back(parse_qubit(jp, where + ".extra_photon"));
    }
    scheme.branches.push_back(std::move(b));
  }
  return scheme;
}

// ---------------------------------------------------------------- files and text

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvariantViolation("io", "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvariantViolation("io", "cannot write " + path.string());
  out << text;
}

Json parse_json(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    format_error(std::string(what) + " is not valid JSON: " + e.what());
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int{md[i]};
  return os.str();
}

// ---------------------------------------------------------------- cuts and reports

Bipartition parse_cut(int n_qubits, std::string_view spec) {
  std::vector<int> qubits;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t end = std::min(spec.find(',', start), spec.size());
    const std::string_view token = spec.substr(start, end - start);
    int q = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), q);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InvariantViolation("cut", "cannot parse \"" + std::string(spec) + "\" as comma-separated qubits");
    }
    if (q < 1 || q > n_qubits) {
      throw InvariantViolation("cut", "qubit " + std::to_string(q) + " outside 1.." + std::to_string(n_qubits));
    }
    if (std::find(qubits.begin(), qubits.end(), q) != qubits.end()) {
      throw InvariantViolation("cut", "qubit " + std::to_string(q) + " listed twice");
    }
    qubits.push_back(q);
    start = end + 1;
  }
  if (qubits.empty() || static_cast<int>(qubits.size()) == n_qubits) {
    throw InvariantViolation("cut", "both groups of a cut must be non-empty");
  }
  return Bipartition::from_qubits(n_qubits, qubits);
}

Json cut_to_json(const Bipartition& cut) { return Json(cut.group_a()); }

Json Report::to_json() const {
  Json doc;
  doc["command"] = command;
  doc["inputs"] = inputs;
  doc["results"] = results;
  doc["verdict"] = verdict ? Json(*verdict) : Json(nullptr);
  doc["seed"] = seed ? Json(*seed) : Json(nullptr);
  doc["version"] = kToolVersion;
  return doc;
}

}  // namespace boundent::io
