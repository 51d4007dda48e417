#pragma once

#include <json.hpp>
#include <string>

#include "ms2ic/algebras.hpp"
#include "ms2ic/calculus.hpp"
#include "ms2ic/pi2.hpp"
#include "ms2ic/semantics.hpp"

namespace ms2ic {

using json = nlohmann::json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json load_json_file(const std::string& path);

KripkeFrame kripke_from_json(const json& j);
ModalContactFrame contact_from_json(const json& j);
AnyFrame frame_from_json(const json& j);  // "R" selects a modal contact frame
json to_json(const KripkeFrame& f);
json to_json(const ModalContactFrame& m);
json to_json(const AnyFrame& f);

// {"p": ["x", "y"], "#j": "x"}
Valuation valuation_from_json(const json& j, const std::vector<std::string>& worlds);
json to_json(const Valuation& v, const std::vector<std::string>& worlds);

Algebra algebra_from_json(const json& j);
json to_json(const Algebra& a);

Proof proof_from_json(const json& j);
json to_json(const Proof& p);

json to_json(const Report& r);
json to_json(const Countermodel& c);
json to_json(const AdmissibilityReport& r);

}  // namespace ms2ic
