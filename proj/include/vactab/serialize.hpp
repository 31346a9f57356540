#pragma once

#include <json.hpp>

#include "vactab/bijections.hpp"
#include "vactab/qpoly.hpp"
#include "vactab/sequences.hpp"
#include "vactab/setpart.hpp"
#include "vactab/symfunc.hpp"
#include "vactab/tableau.hpp"
#include "vactab/verify.hpp"
#include "vactab/walks.hpp"

namespace vactab {

using nlohmann::json;

// Partition: array of parts, weakly decreasing; the empty shape is [].
json to_json(const IntegerPartition& p);
IntegerPartition partition_from_json(const json& j);

json to_json(const Cell& c);  // [row, col]
Cell cell_from_json(const json& j);

json to_json(const Tableau& t);  // array of rows
Tableau tableau_from_json(const json& j);

json to_json(const TwoLineArray& a);  // array of [u, v]
TwoLineArray two_line_from_json(const json& j);

// {"variant": tag, "n": int (nvac only), "shapes": [...]}
json to_json(const VacillatingTableau& w);
VacillatingTableau walk_from_json(const json& j);

// {"ground": [...], "blocks": [[...], ...]}
json to_json(const SetPartition& p);
SetPartition set_partition_from_json(const json& j);

// SetPartition fields plus "marked": block indices in max order.
json to_json(const MarkedSetPartition& p);
MarkedSetPartition marked_partition_from_json(const json& j);

json to_json(const PsiImage& img);  // {"partition": ..., "tableau": ...}
PsiImage psi_image_from_json(const json& j);

json to_json(const DiImage& img);  // {"tableau": ..., "walk": ...}
DiImage di_image_from_json(const json& j);

json to_json(const PsiTrace& trace);  // [{"step", "E", "T"}, ...]

json to_json(const QPoly& p);  // coefficient strings, ascending degree
QPoly qpoly_from_json(const json& j);

json to_json(const EvalPoint& pt);  // "p/q" strings
EvalPoint eval_point_from_json(const json& j);

json to_json(const SequenceTable& t);  // decimal strings
json to_json(const VerificationReport& r);

}  // namespace vactab
