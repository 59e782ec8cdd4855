#ifndef SVAR_TIME_SERIES_HPP
#define SVAR_TIME_SERIES_HPP

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include <Eigen/Dense>

namespace svar {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : Error {
  using Error::Error;
};
struct NumericalError : Error {
  using Error::Error;
};

// Calendar period: year plus zero-based sub-period within the year.
struct Period {
  int year = 1;
  int sub = 0;  // 0 .. frequency-1
};

// Parses "1955Q3", "1955M2", "1955.5" (fraction of a year) or "1955".
inline Period parse_period(const std::string& label, int frequency) {
  Period p;
  auto qm = label.find_first_of("QqMm");
  try {
    if (qm != std::string::npos) {
      p.year = std::stoi(label.substr(0, qm));
      p.sub = std::stoi(label.substr(qm + 1)) - 1;
    } else if (label.find('.') != std::string::npos) {
      double t = std::stod(label);
      p.year = static_cast<int>(std::floor(t));
      p.sub = static_cast<int>(std::lround((t - p.year) * frequency));
    } else {
      p.year = std::stoi(label);
      p.sub = 0;
    }
  } catch (const std::exception&) {
    throw ConfigError("cannot parse period label '" + label + "'");
  }
  if (p.sub < 0 || p.sub >= frequency)
    throw ConfigError("period label '" + label + "' is not aligned to frequency " +
                      std::to_string(frequency));
  return p;
}

inline std::string format_period(const Period& p, int frequency) {
  if (frequency == 1) return std::to_string(p.year);
  char unit = frequency == 4 ? 'Q' : frequency == 12 ? 'M' : 'P';
  return std::to_string(p.year) + unit + std::to_string(p.sub + 1);
}

// Observed data: T x N matrix with variable names and a regular time index.
class TimeSeries {
 public:
  TimeSeries(Eigen::MatrixXd values, std::vector<std::string> names,
             Period start = {1, 0}, int frequency = 1)
      : values_(std::move(values)),
        names_(std::move(names)),
        start_(start),
        frequency_(frequency) {
    if (values_.rows() < 1 || values_.cols() < 1)
      throw ConfigError("time series must have at least one row and one column");
    if (!values_.allFinite())
      throw ConfigError("time series contains non-finite entries");
    if (static_cast<Eigen::Index>(names_.size()) != values_.cols())
      throw ConfigError("variable name count does not match column count");
    std::unordered_set<std::string> seen;
    for (const auto& n : names_)
      if (!seen.insert(n).second)
        throw ConfigError("duplicate variable name '" + n + "'");
    if (frequency_ < 1) throw ConfigError("frequency must be positive");
  }

  Eigen::Index rows() const { return values_.rows(); }
  Eigen::Index cols() const { return values_.cols(); }
  const Eigen::MatrixXd& values() const { return values_; }
  const std::vector<std::string>& names() const { return names_; }
  const Period& start() const { return start_; }
  int frequency() const { return frequency_; }

  // 1-based row index of a period label; errors outside the sample range.
  Eigen::Index period_index(const std::string& label) const {
    Period p = parse_period(label, frequency_);
    long offset = static_cast<long>(p.year - start_.year) * frequency_ +
                  (p.sub - start_.sub);
    if (offset < 0 || offset >= rows())
      throw ConfigError("period '" + label + "' is outside the sample range " +
                        format_period(start_, frequency_) + " .. " +
                        format_period(period_at(rows() - 1), frequency_));
    return offset + 1;
  }

  Period period_at(Eigen::Index row0) const {  // zero-based row
    long total = static_cast<long>(start_.sub) + row0;
    Period p;
    p.year = start_.year + static_cast<int>(total / frequency_);
    p.sub = static_cast<int>(total % frequency_);
    return p;
  }

 private:
  Eigen::MatrixXd values_;
  std::vector<std::string> names_;
  Period start_;
  int frequency_;
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

inline bool parse_double(const std::string& s, double& out) {
  const char* b = s.c_str();
  char* e = nullptr;
  out = std::strtod(b, &e);
  if (e == b) return false;
  while (*e == ' ' || *e == '\t' || *e == '\r') ++e;
  return *e == '\0' && std::isfinite(out);
}

}  // namespace detail

// CSV ingestion: comma separated, '.' decimal, optional header auto-detected
// by a numeric parse of the first row.
inline TimeSeries load_csv(const std::string& path, Period start = {1, 0},
                           int frequency = 1) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open file '" + path + "'");

  std::vector<std::vector<std::string>> raw;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    raw.push_back(detail::split_csv_line(line));
  }
  if (raw.empty()) throw ConfigError("file '" + path + "' is empty");

  std::vector<std::string> names;
  std::size_t first_data = 0;
  double tmp;
  bool first_numeric = true;
  for (const auto& c : raw[0])
    if (!detail::parse_double(c, tmp)) first_numeric = false;
  if (!first_numeric) {
    names = raw[0];
    first_data = 1;
    if (raw.size() == 1) throw ConfigError("file '" + path + "' has a header but no data");
  }

  const std::size_t ncol = raw[first_data].size();
  if (names.empty())
    for (std::size_t j = 0; j < ncol; ++j) names.push_back("v" + std::to_string(j + 1));
  if (names.size() != ncol) throw ConfigError("header width does not match data width");

  Eigen::MatrixXd values(raw.size() - first_data, ncol);
  for (std::size_t r = first_data; r < raw.size(); ++r) {
    if (raw[r].size() != ncol)
      throw ConfigError("ragged row " + std::to_string(r + 1 - first_data) + " in '" +
                        path + "': expected " + std::to_string(ncol) + " cells, got " +
                        std::to_string(raw[r].size()));
    for (std::size_t c = 0; c < ncol; ++c) {
      double v;
      if (!detail::parse_double(raw[r][c], v))
        throw ConfigError("non-numeric cell at row " + std::to_string(r + 1 - first_data) +
                          ", column " + std::to_string(c + 1) + " in '" + path + "'");
      values(static_cast<Eigen::Index>(r - first_data), static_cast<Eigen::Index>(c)) = v;
    }
  }
  return TimeSeries(std::move(values), std::move(names), start, frequency);
}

inline void save_csv(const TimeSeries& ts, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write file '" + path + "'");
  out << std::setprecision(17);
  for (std::size_t j = 0; j < ts.names().size(); ++j)
    out << ts.names()[j] << (j + 1 < ts.names().size() ? "," : "\n");
  for (Eigen::Index i = 0; i < ts.rows(); ++i)
    for (Eigen::Index j = 0; j < ts.cols(); ++j)
      out << ts.values()(i, j) << (j + 1 < ts.cols() ? "," : "\n");
}

// VAR design: Y (T-p) x N, X (T-p) x (N p + 1), row t = [y_{t-1}',...,y_{t-p}', 1].
struct DesignMatrices {
  Eigen::MatrixXd Y;
  Eigen::MatrixXd X;
  int p = 1;

  Eigen::Index n_vars() const { return Y.cols(); }
  Eigen::Index n_regressors() const { return X.cols(); }
  Eigen::Index t_eff() const { return Y.rows(); }
};

inline DesignMatrices build_design(const TimeSeries& ts, int p) {
  if (p < 1) throw ConfigError("lag order must be at least 1");
  const Eigen::Index T = ts.rows(), N = ts.cols();
  if (T <= p)
    throw ConfigError("sample length " + std::to_string(T) +
                      " does not exceed lag order " + std::to_string(p));
  const Eigen::Index Te = T - p, K = N * p + 1;
  DesignMatrices d;
  d.p = p;
  d.Y = ts.values().bottomRows(Te);
  d.X.resize(Te, K);
  for (Eigen::Index t = 0; t < Te; ++t) {
    for (int l = 1; l <= p; ++l)
      d.X.block(t, N * (l - 1), 1, N) = ts.values().row(t + p - l);
    d.X(t, K - 1) = 1.0;
  }
  return d;
}

// Companion form of a K x N coefficient matrix (K = N p + 1): (Np) x (Np)
// transition matrix plus the constant vector.
struct CompanionForm {
  Eigen::MatrixXd F;
  Eigen::VectorXd c;
};

inline CompanionForm companion(const Eigen::MatrixXd& A, int p) {
  const Eigen::Index K = A.rows(), N = A.cols();
  if (K != N * p + 1)
    throw ConfigError("coefficient matrix rows " + std::to_string(K) +
                      " incompatible with N=" + std::to_string(N) +
                      ", p=" + std::to_string(p));
  CompanionForm cf;
  cf.F = Eigen::MatrixXd::Zero(N * p, N * p);
  for (int l = 0; l < p; ++l)
    cf.F.block(0, N * l, N, N) = A.block(N * l, 0, N, N).transpose();
  if (p > 1)
    cf.F.block(N, 0, N * (p - 1), N * (p - 1)) =
        Eigen::MatrixXd::Identity(N * (p - 1), N * (p - 1));
  cf.c = Eigen::VectorXd::Zero(N * p);
  cf.c.head(N) = A.row(K - 1).transpose();
  return cf;
}

}  // namespace svar

#endif
