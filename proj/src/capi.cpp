#include "credal/credal.h"

#include <cstring>
#include <string>

#include "credal/commands.hpp"

struct credal_model {
  credal::ModelDocument doc;
};

struct credal_options {
  credal::CommandOptions options;
};

namespace {

thread_local std::string last_error;

credal_status fail(credal_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
credal_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    return fn();
  } catch (const credal::UsageError& e) {
    return fail(CREDAL_ERROR_USAGE, e.what());
  } catch (const credal::CapacityError& e) {
    return fail(CREDAL_ERROR_CAPACITY, e.what());
  } catch (const credal::ValidationError& e) {
    return fail(CREDAL_ERROR_VALIDATION, e.what());
  } catch (const std::exception& e) {
    return fail(CREDAL_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(CREDAL_ERROR_INTERNAL, "unknown error");
  }
}

std::size_t cap_or_default(uint64_t cap) {
  return cap == 0 ? credal::kDefaultEnumerationCap : static_cast<std::size_t>(cap);
}

unsigned parse_unsigned(const char* key, const char* value) {
  std::string s(value);
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw credal::UsageError(std::string("option '") + key + "' expects a non-negative integer");
  return static_cast<unsigned>(std::stoul(s));
}

}  // namespace

extern "C" {

const char* credal_version(void) { return "0.1.0"; }

const char* credal_last_error(void) { return last_error.c_str(); }

void credal_string_free(char* text) { std::free(text); }

credal_status credal_model_load_file(const char* path, uint64_t cap, credal_model** out) {
  if (!path || !out) return fail(CREDAL_ERROR_USAGE, "null argument");
  return guarded([&] {
    *out = new credal_model{credal::load_model(path, cap_or_default(cap))};
    return CREDAL_OK;
  });
}

credal_status credal_model_load_json(const char* json, uint64_t cap, credal_model** out) {
  if (!json || !out) return fail(CREDAL_ERROR_USAGE, "null argument");
  return guarded([&] {
    *out = new credal_model{credal::parse_model(json, cap_or_default(cap))};
    return CREDAL_OK;
  });
}

credal_status credal_model_serialize(const credal_model* model, char** out) {
  if (!model || !out) return fail(CREDAL_ERROR_USAGE, "null argument");
  return guarded([&] {
    *out = duplicate(credal::serialize_model(model->doc));
    return CREDAL_OK;
  });
}

void credal_model_free(credal_model* model) { delete model; }

credal_status credal_options_create(credal_options** out) {
  if (!out) return fail(CREDAL_ERROR_USAGE, "null argument");
  *out = new credal_options{};
  return CREDAL_OK;
}

credal_status credal_options_set(credal_options* options, const char* key, const char* value) {
  if (!options || !key || !value) return fail(CREDAL_ERROR_USAGE, "null argument");
  return guarded([&] {
    auto& o = options->options;
    std::string k(key);
    if (k == "gamble") o.gamble = value;
    else if (k == "poly") o.poly = value;
    else if (k == "h") o.h = value;
    else if (k == "theta") o.theta = value;
    else if (k == "ns") o.ns = value;
    else if (k == "n") o.n = parse_unsigned(key, value);
    else if (k == "cap") {
      auto cap = parse_unsigned(key, value);
      o.cap = cap == 0 ? credal::kDefaultEnumerationCap : cap;
    } else
      return fail(CREDAL_ERROR_USAGE, "unknown option '" + k + "'");
    return CREDAL_OK;
  });
}

credal_status credal_options_set_format(credal_options* options, credal_format format) {
  if (!options) return fail(CREDAL_ERROR_USAGE, "null argument");
  switch (format) {
    case CREDAL_FORMAT_TEXT: options->options.format = credal::OutputFormat::Text; break;
    case CREDAL_FORMAT_JSON: options->options.format = credal::OutputFormat::Json; break;
    case CREDAL_FORMAT_CSV: options->options.format = credal::OutputFormat::Csv; break;
    default: return fail(CREDAL_ERROR_USAGE, "unknown output format");
  }
  return CREDAL_OK;
}

void credal_options_free(credal_options* options) { delete options; }

int credal_is_command(const char* name) { return name && credal::is_command(name) ? 1 : 0; }

const char* credal_usage(void) {
  static const std::string text = credal::usage_text();
  return text.c_str();
}

credal_status credal_run(const credal_model* model, const char* command,
                         const credal_options* options, char** out) {
  if (!model || !command || !out) return fail(CREDAL_ERROR_USAGE, "null argument");
  *out = nullptr;
  return guarded([&] {
    credal::CommandOptions defaults;
    auto result = credal::dispatch(command, model->doc, options ? options->options : defaults);
    if (result.exit_code != credal::kExitOk) {
      auto status = result.exit_code == credal::kExitValidation ? CREDAL_ERROR_VALIDATION
                    : result.exit_code == credal::kExitCapacity ? CREDAL_ERROR_CAPACITY
                    : result.exit_code == credal::kExitUsage    ? CREDAL_ERROR_USAGE
                                                                : CREDAL_ERROR_INTERNAL;
      return fail(status, result.err);
    }
    *out = duplicate(result.out);
    return CREDAL_OK;
  });
}

credal_status credal_nu(const uint32_t* counts, size_t length, char** out) {
  if ((!counts && length) || !out) return fail(CREDAL_ERROR_USAGE, "null argument");
  return guarded([&] {
    std::vector<unsigned> c(counts, counts + length);
    *out = duplicate(credal::nu(std::span<const unsigned>(c)).get_str());
    return CREDAL_OK;
  });
}

credal_status credal_rational_normalize(const char* text, char** out) {
  if (!text || !out) return fail(CREDAL_ERROR_USAGE, "null argument");
  return guarded([&] {
    *out = duplicate(credal::to_string(credal::parse_rational(text)));
    return CREDAL_OK;
  });
}

}  // extern "C"
