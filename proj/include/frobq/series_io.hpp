#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "frobq/qseries.hpp"
#include "frobq/zetaseries.hpp"

namespace frobq {

// JSON encoding (bit-exact round trip; rationals as "p" or "p/q" strings):
//   QSeries    {"prec": "61", "denom": 4, "terms": [[1, "2"], [9, "-1/3"]]}
//   ZetaSeries {"qprec": "12", "slots": [[-1, {...qseries...}], [1, {...}]]}
nlohmann::json qseries_to_json(const QSeries& s);
QSeries qseries_from_json(const nlohmann::json& j);
nlohmann::json zetaseries_to_json(const ZetaSeries& z);
ZetaSeries zetaseries_from_json(const nlohmann::json& j);

// Line-oriented text encoding (same fidelity):
//   qseries v1 / prec <rat> / denom <int> / term <e_num> <rat> ... / end
//   zetaseries v1 / qprec <rat> / slot <r2> followed by a qseries block ... / end
void write_qseries_text(std::ostream& os, const QSeries& s);
QSeries read_qseries_text(std::istream& is);
void write_zetaseries_text(std::ostream& os, const ZetaSeries& z);
ZetaSeries read_zetaseries_text(std::istream& is);

}  // namespace frobq
