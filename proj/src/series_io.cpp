#include "frobq/series_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace frobq {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("series_io: " + what);
}

std::string next_line(std::istream& is) {
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return line;
  }
  bad("unexpected end of input");
}

}  // namespace

nlohmann::json qseries_to_json(const QSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : s.terms())
    terms.push_back({e, rat_str(c)});
  return {{"prec", rat_str(s.prec())},
          {"denom", s.denom()},
          {"terms", std::move(terms)}};
}

QSeries qseries_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("prec") || !j.contains("denom") ||
      !j.contains("terms"))
    bad("malformed qseries object");
  Rat prec = parse_rat(j.at("prec").get<std::string>());
  long long denom = j.at("denom").get<long long>();
  QSeries::TermMap terms;
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 2) bad("malformed qseries term");
    long long e = t.at(0).get<long long>();
    Rat c = parse_rat(t.at(1).get<std::string>());
    if (!terms.emplace(e, c).second) bad("duplicate qseries term exponent");
  }
  return QSeries::raw(denom, std::move(terms), prec);
}

nlohmann::json zetaseries_to_json(const ZetaSeries& z) {
  nlohmann::json slots = nlohmann::json::array();
  for (const auto& [r2, s] : z.slots())
    slots.push_back({r2, qseries_to_json(s)});
  return {{"qprec", rat_str(z.qprec())}, {"slots", std::move(slots)}};
}

ZetaSeries zetaseries_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("qprec") || !j.contains("slots"))
    bad("malformed zetaseries object");
  ZetaSeries z(parse_rat(j.at("qprec").get<std::string>()));
  for (const auto& t : j.at("slots")) {
    if (!t.is_array() || t.size() != 2) bad("malformed zetaseries slot");
    z.set_slot(t.at(0).get<long long>(), qseries_from_json(t.at(1)));
  }
  return z;
}

void write_qseries_text(std::ostream& os, const QSeries& s) {
  os << "qseries v1\n";
  os << "prec " << rat_str(s.prec()) << "\n";
  os << "denom " << s.denom() << "\n";
  for (const auto& [e, c] : s.terms())
    os << "term " << e << " " << rat_str(c) << "\n";
  os << "end\n";
}

QSeries read_qseries_text(std::istream& is) {
  if (next_line(is) != "qseries v1") bad("expected 'qseries v1' header");
  std::istringstream pl(next_line(is));
  std::string kw, val;
  if (!(pl >> kw >> val) || kw != "prec") bad("expected 'prec <rat>'");
  Rat prec = parse_rat(val);
  std::istringstream dl(next_line(is));
  long long denom = 0;
  if (!(dl >> kw >> denom) || kw != "denom") bad("expected 'denom <int>'");
  QSeries::TermMap terms;
  for (;;) {
    std::string line = next_line(is);
    if (line == "end") break;
    std::istringstream tl(line);
    long long e = 0;
    if (!(tl >> kw >> e >> val) || kw != "term") bad("expected 'term <e> <rat>'");
    if (!terms.emplace(e, parse_rat(val)).second)
      bad("duplicate qseries term exponent");
  }
  return QSeries::raw(denom, std::move(terms), prec);
}

void write_zetaseries_text(std::ostream& os, const ZetaSeries& z) {
  os << "zetaseries v1\n";
  os << "qprec " << rat_str(z.qprec()) << "\n";
  for (const auto& [r2, s] : z.slots()) {
    os << "slot " << r2 << "\n";
    write_qseries_text(os, s);
  }
  os << "end\n";
}

ZetaSeries read_zetaseries_text(std::istream& is) {
  if (next_line(is) != "zetaseries v1") bad("expected 'zetaseries v1' header");
  std::istringstream pl(next_line(is));
  std::string kw, val;
  if (!(pl >> kw >> val) || kw != "qprec") bad("expected 'qprec <rat>'");
  ZetaSeries z(parse_rat(val));
  for (;;) {
    std::string line = next_line(is);
    if (line == "end") break;
    std::istringstream sl(line);
    long long r2 = 0;
    if (!(sl >> kw >> r2) || kw != "slot") bad("expected 'slot <r2>'");
    z.set_slot(r2, read_qseries_text(is));
  }
  return z;
}

}  // namespace frobq
