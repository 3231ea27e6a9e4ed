#include "json.hpp"
#include <string_view>

#include "ikg/errors.hpp"
#include "ikg/spectra.hpp"

namespace ikg {

namespace detail {
extern const std::string_view kTable1Json;
extern const std::string_view kTable2Json;
extern const std::string_view kTable3Json;
}  // namespace detail

namespace {

cplx complex_of(const nlohmann::json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

}  // namespace

TableSpec parse_table_spec(const std::string& json_text) {
  try {
    const auto j = nlohmann::json::parse(json_text);
    TableSpec t;
    t.id = j.at("id").get<int>();
    t.params.kind = gaudin_kind_from_string(j.at("kind").get<std::string>());
    for (const auto& th : j.at("theta")) t.params.theta.push_back(complex_of(th));
    if (j.contains("eps")) t.params.eps = complex_of(j.at("eps"));
    if (j.contains("sigma")) t.params.sigma = complex_of(j.at("sigma"));
    if (j.contains("sigma_bar")) t.params.sigma_bar = complex_of(j.at("sigma_bar"));
    if (j.contains("k")) t.k = j.at("k").get<int>();
    t.site = j.at("site").get<int>();
    t.rotation = complex_of(j.at("energy_rotation"));
    t.admissible_m = j.at("admissible_M").get<std::vector<int>>();
    for (const auto& r : j.at("rows")) {
      TableRow row;
      for (const auto& z : r.at("roots")) row.roots.push_back(complex_of(z));
      row.energy = r.at("energy").get<double>();
      row.degeneracy = r.at("degeneracy").get<int>();
      t.rows.push_back(std::move(row));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("table spec: ") + e.what());
  }
}

const TableSpec& table_spec(int id) {
  static const TableSpec t1 = parse_table_spec(std::string(detail::kTable1Json));
  static const TableSpec t2 = parse_table_spec(std::string(detail::kTable2Json));
  static const TableSpec t3 = parse_table_spec(std::string(detail::kTable3Json));
  switch (id) {
    case 1: return t1;
    case 2: return t2;
    case 3: return t3;
  }
  throw InvalidArgument("table id must be 1, 2 or 3");
}

}  // namespace ikg
