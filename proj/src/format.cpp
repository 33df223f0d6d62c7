#include "ludersgap/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ludersgap {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

double parse_plain(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw std::invalid_argument("cannot parse parameter value '" + s + "'");
  return v;
}

std::string join_point(const std::vector<std::string>& names, const std::vector<double>& pt) {
  std::string out;
  for (size_t i = 0; i < pt.size(); ++i) {
    if (i) out += ";";
    out += (i < names.size() ? names[i] : "p" + std::to_string(i + 1)) + "=" + fmt_sig(pt[i]);
  }
  return out;
}

}  // namespace

std::string fmt_sig(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string to_csv(const ReproTable& t) {
  std::string out;
  const bool labeled = !t.labels.empty();
  if (labeled) out += "row,";
  for (size_t c = 0; c < t.header.size(); ++c) out += t.header[c] + (c + 1 < t.header.size() ? "," : "\n");
  for (size_t r = 0; r < t.data.size(); ++r) {
    if (labeled) out += t.labels[r] + ",";
    for (size_t c = 0; c < t.data[r].size(); ++c)
      out += fmt_sig(t.data[r][c]) + (c + 1 < t.data[r].size() ? "," : "\n");
  }
  return out;
}

std::string to_csv(const std::vector<AuditRow>& rows) {
  std::string out = "form,verdict,max_dev_published,max_dev_corrected,worst_point\n";
  for (const auto& r : rows) {
    out += r.form;
    out += r.pass ? ",pass," : ",suspect-typo,";
    out += fmt_sig(r.max_dev_published) + "," + fmt_sig(r.max_dev_corrected) + ",";
    out += join_point(r.param_names, r.worst_point) + "\n";
  }
  return out;
}

std::string to_json(const ReproTable& t) {
  nlohmann::json doc;
  doc["target"] = t.target;
  doc["ok"] = t.ok;
  doc["columns"] = t.header;
  nlohmann::json rows = nlohmann::json::array();
  for (size_t r = 0; r < t.data.size(); ++r) {
    nlohmann::json row;
    if (!t.labels.empty()) row["row"] = t.labels[r];
    for (size_t c = 0; c < t.data[r].size(); ++c) row[t.header[c]] = t.data[r][c];
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string to_json(const std::vector<AuditRow>& rows) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row;
    row["form"] = r.form;
    row["verdict"] = r.pass ? "pass" : "suspect-typo";
    row["max_dev_published"] = r.max_dev_published;
    row["max_dev_corrected"] = r.max_dev_corrected;
    nlohmann::json wp;
    for (size_t i = 0; i < r.worst_point.size(); ++i)
      wp[i < r.param_names.size() ? r.param_names[i] : "p" + std::to_string(i + 1)] =
          r.worst_point[i];
    row["worst_point"] = std::move(wp);
    doc.push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

double parse_param_token(const std::string& tok) {
  std::string s = trim(tok);
  if (s.empty()) throw std::invalid_argument("empty parameter value");
  double sign = 1.0;
  if (s[0] == '+' || s[0] == '-') {
    sign = s[0] == '-' ? -1.0 : 1.0;
    s = s.substr(1);
  }
  if (s == "1/sqrt2" || s == "1/sqrt(2)") return sign / std::sqrt(2.0);
  const auto at = s.find("pi");
  if (at != std::string::npos) {
    const std::string pre = s.substr(0, at);
    const std::string post = s.substr(at + 2);
    double coef = 1.0;
    if (!pre.empty()) {
      std::string c = pre;
      if (c.back() == '*') c.pop_back();
      if (!c.empty()) coef = parse_plain(c);
    }
    double div = 1.0;
    if (!post.empty()) {
      if (post[0] != '/' || post.size() < 2)
        throw std::invalid_argument("cannot parse parameter value '" + tok + "'");
      div = parse_plain(post.substr(1));
    }
    return sign * coef * kPi / div;
  }
  return sign * parse_plain(s);
}

}  // namespace ludersgap
