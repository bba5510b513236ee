#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nklab/suites.hpp"

namespace nk::rep {

inline constexpr const char* kVersion = "nklab 0.1.0";

// Minimal JSON writer with a fixed serialization policy: keys in insertion
// order, doubles at 17 significant digits, UTF-8 pass.through. Reports with
// identical content serialize byte-identically.
class JsonWriter {
 public:
  void begin_object();
  void end_object();
  void begin_array();
  void end_array();
  void key(const std::string& k);
  void value(const std::string& v);
  void value(const char* v);
  void value(double v);
  void value(int64_t v);
  void value(uint64_t v);
  void value(bool v);

  const std::string& str() const { return out_; }

 private:
  void comma();
  void literal(const std::string& s);

  std::string out_;
  std::vector<bool> first_;  // per nesting level
  bool pending_key_ = false;
};

std::string format_double(double v);
std::string escape(const std::string& s);

struct RunConfig {
  std::string command;
  std::string ambient = "s3s3";
  std::string name;     // catalog entry
  std::string case_id;  // obstruction case
  int samples = 1000;
  uint64_t seed = 42;
  double fd_step = 1e-4;
  double fd_step2 = 1e-3;
  double tol_scale = 1.0;
  int grid = 100;
  int refine = 50;
  std::string out_path;
};

// Full run report. wall_time_s is the only field allowed to differ between
// identical runs.
std::string render_report(const RunConfig& cfg,
                          const std::vector<suites::CheckRecord>& checks,
                          const std::vector<suites::SurfaceSample>* surface_samples,
                          const obs::Report* obstruction, bool pass,
                          double wall_time_s);

}  // namespace nk::rep
