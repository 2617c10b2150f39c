#ifndef BMQ_IO_HPP
#define BMQ_IO_HPP

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "bmq/green.hpp"
#include "bmq/mutation_class.hpp"
#include "bmq/presentation.hpp"
#include "bmq/quiver.hpp"
#include "bmq/verification.hpp"

namespace bmq {

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const nlohmann::json& j);

nlohmann::json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);

nlohmann::json catalog_to_json(const ClassCatalog& cat);
nlohmann::json report_to_json(const VerificationReport& rep);
nlohmann::json green_to_json(const GreenDecomposition& g,
                             const EnumeratedMonoid& m);

// Frozen vertex drawn filled; edges labelled with their weight only when the
// weight is at least 2.
std::string quiver_to_dot(const Quiver& q);

nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace bmq

#endif
