#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qadhm/adhm/datum.hpp"
#include "qadhm/adhm/stability.hpp"
#include "qadhm/monad/chern.hpp"
#include "qadhm/monad/monad.hpp"
#include "qadhm/qcalculus/operators.hpp"
#include "qadhm/qcalculus/table.hpp"
#include "qadhm/qinstanton/qops.hpp"

namespace qadhm::io {

using json = nlohmann::json;  // std::map-backed, so keys come out sorted

// Raised for anything that does not match the documented schemas.
struct SchemaError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

json to_json(const GaussRational& g);
json to_json(const QLaurent& f);   // {"-1":"1/1","1":"1/1"}
json to_json(const QRat& f);       // {"num":..,"den":..}
json to_json(const QMatrix& m);
json to_json(const ComplexADHMDatum& d);
json to_json(const RealADHMDatum& d);
json to_json(const ProjPoint& p);  // "[z:w]"
json to_json(const StabilityReport& s);
json to_json(const Monad& m);
json to_json(const SheafClassification& s);
json to_json(const NCPoly& f);
json to_json(const NCForm& w);
json to_json(const CalculusTable& t);
json to_json(const ChernClass& c);
json to_json(const ModuleOperator& op);

GaussRational gauss_from_json(const json& j);
QLaurent laurent_from_json(const json& j);
QMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const char* name);
ComplexADHMDatum complex_datum_from_json(const json& j);  // also accepts kind "real" with xi = 0 (embedded)
RealADHMDatum real_datum_from_json(const json& j);
Monad monad_from_json(const json& j);
NCPoly ncpoly_from_json(const json& j);

// Reads a file and parses it; SchemaError on unreadable or malformed input.
json read_file(const std::string& path);
// Two-space indented, trailing newline.
std::string dump(const json& j);

json error_object(const std::string& kind, const std::string& message);

}  // namespace qadhm::io
