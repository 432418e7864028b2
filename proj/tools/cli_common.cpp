#include "cli_common.hpp"

#include <fstream>
#include <iostream>
#include <streambuf>

#include "cgt/errors.hpp"

namespace cli {

namespace {

struct NullBuf : std::streambuf {
  int overflow(int c) override { return traits_type::not_eof(c); }
};

std::streambuf* real_stdout = nullptr;

}  // namespace

void quiet_text_if_json_stdout(const std::string& json_path) {
  static NullBuf null;
  if (json_path == "-" && !real_stdout) real_stdout = std::cout.rdbuf(&null);
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const cgt::ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return 1;
  } catch (const cgt::SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return 2;
  } catch (const cgt::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::bad_alloc&) {
    std::cerr << "out of memory\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

void write_json(const std::string& path, const nlohmann::json& j) {
  if (path == "-") {
    std::ostream out(real_stdout ? real_stdout : std::cout.rdbuf());
    out << j.dump(2) << "\n";
    out.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw cgt::InputError("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace cli
