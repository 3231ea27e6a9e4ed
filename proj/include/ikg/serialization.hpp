#pragma once

// JSON and CSV encodings. Complex numbers are [re, im] pairs at full double
// precision; matrices are {"dim", "entries"} with row-major entries.

#include <string>
#include <vector>

#include "ikg/spectra.hpp"
#include "json.hpp"

namespace ikg {

using Json = nlohmann::ordered_json;

Json complex_to_json(cplx z);
cplx complex_from_json(const Json& j);

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json params_to_json(const GaudinParams& p);
GaudinParams params_from_json(const Json& j);

Json rootset_to_json(const RootSet& rs);
RootSet rootset_from_json(const Json& j);

Json spectrum_to_json(const Spectrum& s);
Json report_to_json(const SpectrumReport& r);
Json reproduce_to_json(const ReproduceReport& r);

// One line per matched level: e_ed, degeneracy, e_bethe, abs_err, roots.
std::string levels_csv(const SpectrumReport& r);

// Complex literals as typed on the command line: "0.4", "-0.40i", "i",
// "0.1+0.2i", "1e-3-2i". Throws InvalidArgument on anything else.
cplx parse_complex(const std::string& text);
std::vector<cplx> parse_complex_list(const std::string& csv);

// Full-precision dump with two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace ikg
