#pragma once

// Text records for batch input and JSON serialization of reports.
//
//   q1=a,b q2=a,b q3=a,b q4=a,b c=n field=Q|R
//   gamma3=a,b,c phi3=a,b,c phi5=a,b,c,d,e field=Q|R
//
// Blank lines and lines starting with '#' are ignored.

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "e8kit/e8kill.hpp"

namespace e8kit {

class RecordError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Field parse_field(std::string_view text);

E8Input parse_e8_record(std::string_view line);
TitsInput parse_tits_record(std::string_view line);

std::string format_e8_record(const E8Input& in);
std::string format_tits_record(const TitsInput& in);

template <typename Input>
struct BatchLine {
  std::size_t line = 0;
  std::variant<Input, std::string> value;  ///< parsed record or error message
};

std::vector<BatchLine<E8Input>> read_e8_batch(std::istream& in);
std::vector<BatchLine<TitsInput>> read_tits_batch(std::istream& in);

nlohmann::ordered_json to_json(const KillingReport& rep);
nlohmann::ordered_json to_json(const TitsReport& rep);

}  // namespace e8kit
