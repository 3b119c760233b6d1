#include "kprimes/zero_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "kprimes/errors.hpp"

namespace kprimes {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& text, double& out) {
  if (text.empty()) return false;
  errno = 0;
  char* end = nullptr;
  out = std::strtod(text.c_str(), &end);
  return errno == 0 && end == text.c_str() + text.size() && std::isfinite(out);
}

bool parse_int(const std::string& text, std::int64_t& out) {
  if (text.empty()) return false;
  errno = 0;
  char* end = nullptr;
  out = std::strtoll(text.c_str(), &end, 10);
  return errno == 0 && end == text.c_str() + text.size();
}

}  // namespace

std::string format_ordinate(double gamma) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", gamma);
  return buf;
}

ZeroKey parse_zero_key(const std::string& raw) {
  const std::string text = trim(raw);
  if (text == "zeta") return ZeroKey::zeta();
  std::istringstream fields(text);
  std::string field;
  ZeroKey key;
  bool have_q = false;
  while (fields >> field) {
    if (field.rfind("q=", 0) == 0) {
      if (!parse_int(field.substr(2), key.conductor) || key.conductor < 1) {
        throw ValidationError("bad conductor in zero key '" + text + "'");
      }
      have_q = true;
    } else if (field.rfind("chi=", 0) == 0) {
      std::string vec = field.substr(4);
      std::stringstream parts(vec);
      std::string part;
      while (std::getline(parts, part, ',')) {
        std::int64_t e = 0;
        if (!parse_int(part, e)) throw ValidationError("bad exponent vector in zero key '" + text + "'");
        key.exponents.push_back(e);
      }
    } else {
      throw ValidationError("unrecognised field '" + field + "' in zero key");
    }
  }
  if (!have_q) throw ValidationError("zero key '" + text + "' has no q=");
  if (key.conductor == 1) key.exponents.clear();
  if (!key.is_zeta()) {
    const DirichletCharacter chi = key.character();
    if (!chi.is_primitive()) {
      throw ValidationError("zero key '" + text + "' names an imprimitive character");
    }
  }
  return key;
}

ZeroList read_zeros(std::istream& in, ZeroKey fallback_key) {
  ZeroList out;
  out.key = std::move(fallback_key);
  out.source = ZeroSource::imported;
  bool have_height = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string text = trim(line);
    if (text.empty()) continue;
    if (text[0] == '#') {
      const std::string body = trim(text.substr(1));
      try {
        if (body.rfind("key:", 0) == 0) {
          out.key = parse_zero_key(body.substr(4));
        } else if (body.rfind("height:", 0) == 0) {
          if (!parse_double(trim(body.substr(7)), out.height) || out.height < 0.0) {
            throw ValidationError("bad height");
          }
          have_height = true;
        }
      } catch (const ValidationError& e) {
        throw ParseError(lineno, e.what());
      }
      continue;
    }
    double gamma = 0.0;
    if (!parse_double(text, gamma)) throw ParseError(lineno, "not a number: '" + text + "'");
    if (!(gamma > 0.0)) throw ParseError(lineno, "ordinate must be positive");
    if (!out.ordinates.empty() && !(gamma > out.ordinates.back())) {
      throw ParseError(lineno, "ordinates not strictly increasing (" + text + " after " +
                                   format_ordinate(out.ordinates.back()) + ")");
    }
    out.ordinates.push_back(gamma);
  }
  if (!have_height) {
    out.height = out.ordinates.empty() ? 0.0 : out.ordinates.back();
  } else if (!out.ordinates.empty() && out.ordinates.back() > out.height) {
    throw ValidationError("ordinate " + format_ordinate(out.ordinates.back()) + " exceeds declared height");
  }
  out.self_dual = out.key.is_zeta() || out.key.character().is_real();
  return out;
}

ZeroList import_zeros(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DependencyError("cannot open zero file " + path.string());
  return read_zeros(in);
}

void write_zeros(std::ostream& out, const ZeroList& zeros) {
  out << "# key: " << zeros.key.describe() << '\n';
  out << "# height: " << format_ordinate(zeros.height) << '\n';
  for (const double g : zeros.ordinates) out << format_ordinate(g) << '\n';
}

void export_zeros(const ZeroList& zeros, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DependencyError("cannot write zero file " + path.string());
  write_zeros(out, zeros);
  if (!out) throw DependencyError("write failed for " + path.string());
}

}  // namespace kprimes
