#include "cxbox/sampled_field.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "cxbox/errors.hpp"
#include "cxbox/format.hpp"

namespace cxbox {

static_assert(std::endian::native == std::endian::little,
              "serialized fields are little-endian");

std::size_t SampledField::size() const {
  std::size_t n = 1;
  for (std::size_t e : extents) n *= e;
  return n;
}

std::size_t SampledField::index(std::span<const std::size_t> idx) const {
  std::size_t flat = 0;
  for (int a = 0; a < dim(); ++a) flat = flat * extents[a] + idx[a];
  return flat;
}

std::vector<double> SampledField::coordinate(
    std::span<const std::size_t> idx) const {
  std::vector<double> x(dim());
  for (int a = 0; a < dim(); ++a) {
    x[a] = origin[a] + spacing[a] * static_cast<double>(idx[a]);
  }
  return x;
}

void SampledField::check() const {
  const int d = dim();
  if (d < 1) throw ValidationError("sampled field: no axes");
  if (static_cast<int>(origin.size()) != d ||
      static_cast<int>(spacing.size()) != d) {
    throw ValidationError("sampled field: origin/spacing length mismatch");
  }
  for (double s : spacing) {
    if (!(s > 0.0)) throw ValidationError("sampled field: spacing must be > 0");
  }
  for (std::size_t e : extents) {
    if (e == 0) throw ValidationError("sampled field: zero extent");
  }
  if (values.size() != size()) {
    throw ValidationError("sampled field: value count != product of extents");
  }
}

void SampledField::save(std::ostream& out) const {
  check();
  nlohmann::json header;
  header["domain"] = domain == Domain::time ? "time" : "frequency";
  header["origin"] = origin;
  header["spacing"] = spacing;
  header["extents"] = extents;
  out << header.dump() << '\n';
  out.write(reinterpret_cast<const char*>(values.data()),
            static_cast<std::streamsize>(values.size() * sizeof(values[0])));
}

SampledField SampledField::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ValidationError("sampled field: missing header line");
  }
  nlohmann::json header = nlohmann::json::parse(line);
  SampledField field;
  const std::string tag = header.at("domain").get<std::string>();
  if (tag == "time") {
    field.domain = Domain::time;
  } else if (tag == "frequency") {
    field.domain = Domain::frequency;
  } else {
    throw ValidationError("sampled field: unknown domain tag");
  }
  field.origin = header.at("origin").get<std::vector<double>>();
  field.spacing = header.at("spacing").get<std::vector<double>>();
  field.extents = header.at("extents").get<std::vector<std::size_t>>();
  field.values.resize(field.size());
  in.read(reinterpret_cast<char*>(field.values.data()),
          static_cast<std::streamsize>(field.values.size() *
                                       sizeof(field.values[0])));
  if (!in) throw ValidationError("sampled field: truncated payload");
  field.check();
  return field;
}

void SampledField::save_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path);
  save(out);
}

SampledField SampledField::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open for reading: " + path);
  return load(in);
}

void SampledField::write_csv(std::ostream& out) const {
  check();
  out << "# cxbox field csv v1\n";
  const int d = dim();
  for (int a = 0; a < d; ++a) out << 'i' << a << ',';
  out << "re,im\n";
  std::vector<std::size_t> idx(d, 0);
  for (std::size_t flat = 0; flat < values.size(); ++flat) {
    for (int a = 0; a < d; ++a) out << idx[a] << ',';
    out << format_double(values[flat].real()) << ','
        << format_double(values[flat].imag()) << '\n';
    int axis = d - 1;
    while (axis >= 0 && ++idx[axis] == extents[axis]) {
      idx[axis] = 0;
      --axis;
    }
  }
}

}  // namespace cxbox
