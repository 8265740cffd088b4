#include "gqaoa/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gqaoa/errors.hpp"

namespace gqaoa::io {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void put_comment(std::ostringstream& out, const std::string& comment) {
  if (comment.empty()) return;
  std::istringstream lines(comment);
  std::string line;
  while (std::getline(lines, line)) out << "# " << line << '\n';
}

Spectrum spectrum_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("values") || !doc.contains("n")) {
    throw DomainError("spectrum JSON needs keys \"n\" and \"values\"");
  }
  const int n = doc.at("n").get<int>();
  auto values = doc.at("values").get<std::vector<double>>();
  if (n < 1 || n > kMaxQubits || values.size() != (std::size_t{1} << n)) {
    throw DomainError("spectrum JSON: \"values\" must hold 2^n entries for n = " +
                      std::to_string(n));
  }
  return Spectrum(std::move(values));
}

}  // namespace

Spectrum parse_spectrum(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw DomainError("spectrum input is empty");
  if (text[first] == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::exception& e) {
      throw DomainError(std::string("spectrum JSON is malformed: ") + e.what());
    }
    try {
      return spectrum_from_json(doc);
    } catch (const json::exception& e) {
      throw DomainError(std::string("spectrum JSON has wrong types: ") + e.what());
    }
  }

  std::istringstream in(text);
  std::string line;
  int n = -1;
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    if (line.compare(pos, 2, "n=") != 0) {
      throw DomainError("spectrum text must start with a header line n=<int>");
    }
    try {
      std::size_t used = 0;
      n = std::stoi(line.substr(pos + 2), &used);
    } catch (const std::exception&) {
      throw DomainError("spectrum header n=<int> is malformed");
    }
    break;
  }
  if (n < 1) throw DomainError("spectrum header missing or n < 1");
  if (n > kMaxQubits) {
    throw ResourceLimitError("spectrum n = " + std::to_string(n) + " exceeds the " +
                             std::to_string(kMaxQubits) + "-qubit limit");
  }
  const std::size_t expected = std::size_t{1} << n;
  std::vector<double> values;
  values.reserve(expected);
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw DomainError("spectrum value '" + token + "' is not a decimal number");
    }
  }
  if (values.size() != expected) {
    throw DomainError("spectrum header says n = " + std::to_string(n) + " (" +
                      std::to_string(expected) + " values) but found " +
                      std::to_string(values.size()));
  }
  return Spectrum(std::move(values));
}

Spectrum read_spectrum(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open spectrum file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spectrum(buf.str());
}

std::string format_spectrum_text(const Spectrum& spectrum, const std::string& comment) {
  std::ostringstream out;
  put_comment(out, comment);
  out << "n=" << spectrum.n() << '\n';
  for (double v : spectrum.values()) out << fmt(v) << '\n';
  return out.str();
}

json spectrum_json(const Spectrum& spectrum) {
  return json{{"n", spectrum.n()}, {"values", spectrum.values()}};
}

json instance_json(const NppInstance& instance) {
  return json{{"kind", "npp"}, {"n", instance.n}, {"seed", instance.seed},
              {"values", instance.numbers}};
}

json instance_json(const RcmInstance& instance) {
  return json{{"kind", "rcm"}, {"n", instance.n}, {"seed", instance.seed},
              {"values", instance.weights}};
}

json result_json(const OptimizationResult& result) {
  json per_start = json::array();
  for (const StartRecord& rec : result.per_start) {
    per_start.push_back({{"start", rec.start},
                         {"final", rec.final_point},
                         {"start_value", rec.start_value},
                         {"value", rec.final_value},
                         {"iterations", rec.iterations},
                         {"converged", rec.converged},
                         {"warm", rec.warm}});
  }
  return json{{"p", result.p},
              {"gammas", result.best_schedule.gammas},
              {"betas", result.best_schedule.betas},
              {"value", result.best_value},
              {"starts", result.config.starts},
              {"seed", result.config.seed},
              {"converged", result.converged},
              {"per_start", std::move(per_start)}};
}

std::string depth_sweep_csv(const DepthSweepTable& table, const std::string& comment) {
  int width = 0;
  for (const auto& row : table.rows) width = std::max(width, row.p);
  std::ostringstream out;
  put_comment(out, comment);
  out << "p";
  for (int j = 1; j <= width; ++j) out << ",gamma_" << j;
  for (int j = 1; j <= width; ++j) out << ",beta_" << j;
  out << ",value\n";
  for (const auto& row : table.rows) {
    out << row.p;
    for (int j = 0; j < width; ++j) {
      out << ',';
      if (j < row.p) out << fmt(row.schedule.gammas[j]);
    }
    for (int j = 0; j < width; ++j) {
      out << ',';
      if (j < row.p) out << fmt(row.schedule.betas[j]);
    }
    out << ',' << fmt(row.value) << '\n';
  }
  return out.str();
}

std::string convergence_csv(const ConvergenceTable& table, const std::string& comment) {
  std::ostringstream out;
  put_comment(out, comment);
  const int p = table.p;
  auto column = [p](const char* name, int j) {
    return p == 1 ? std::string(name) : std::string(name) + "_" + std::to_string(j + 1);
  };
  out << "n,instances";
  for (int j = 0; j < p; ++j) out << ',' << column("mean_gamma", j) << ',' << column("se_gamma", j);
  for (int j = 0; j < p; ++j) out << ',' << column("mean_beta", j) << ',' << column("se_beta", j);
  out << ",mean_value\n";
  for (const auto& row : table.rows) {
    out << row.n << ',' << row.instances;
    for (int j = 0; j < p; ++j) out << ',' << fmt(row.mean_gammas[j]) << ',' << fmt(row.se_gammas[j]);
    for (int j = 0; j < p; ++j) out << ',' << fmt(row.mean_betas[j]) << ',' << fmt(row.se_betas[j]);
    out << ',' << fmt(row.mean_value) << '\n';
  }
  return out.str();
}

std::string landscape_csv(const LandscapeGrid& grid, const std::string& comment) {
  std::ostringstream out;
  put_comment(out, comment);
  out << "gamma\\beta";
  for (double b : grid.betas) out << ',' << fmt(b);
  out << '\n';
  for (std::size_t i = 0; i < grid.gammas.size(); ++i) {
    out << fmt(grid.gammas[i]);
    for (double v : grid.values[i]) out << ',' << fmt(v);
    out << '\n';
  }
  return out.str();
}

void write_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DomainError("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw DomainError("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw DomainError("cannot move output into place at " + path.string() + ": " + ec.message());
  }
}

}  // namespace gqaoa::io
