#ifndef VSL_CONFIG_HPP
#define VSL_CONFIG_HPP

#include <filesystem>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>

namespace vsl {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// key = value lines. '#' and ';' start comments, blank lines are ignored,
/// keys are long flag names without dashes (p-min, cache, format, ...).
/// A repeated key is an error.
std::map<std::string, std::string> parse_config(std::istream& in);
std::map<std::string, std::string> load_config(const std::filesystem::path& file);

}  // namespace vsl

#endif  // VSL_CONFIG_HPP
