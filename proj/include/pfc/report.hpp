// Check reports and the error taxonomy shared across modules.
#ifndef PFC_REPORT_HPP
#define PFC_REPORT_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace pfc {

struct CheckItem {
  std::string id;
  bool pass = false;
  std::string note;  // witness on failure, context otherwise
};

class Report {
 public:
  void add(std::string id, bool pass, std::string note = {}) {
    items_.push_back({std::move(id), pass, std::move(note)});
  }
  void merge(const Report& r, const std::string& prefix = {}) {
    for (const auto& it : r.items_)
      items_.push_back({prefix + it.id, it.pass, it.note});
  }

  bool ok() const {
    for (const auto& it : items_)
      if (!it.pass) return false;
    return true;
  }

  const CheckItem* first_failure() const {
    for (const auto& it : items_)
      if (!it.pass) return &it;
    return nullptr;
  }

  const std::vector<CheckItem>& items() const { return items_; }

  std::string summary() const {
    int passed = 0;
    for (const auto& it : items_) passed += it.pass;
    std::string s = std::to_string(passed) + "/" + std::to_string(items_.size()) + " checks passed";
    if (const CheckItem* f = first_failure())
      s += "; first failure: " + f->id + (f->note.empty() ? "" : " (" + f->note + ")");
    return s;
  }

 private:
  std::vector<CheckItem> items_;
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedOrder : Error { using Error::Error; };
struct NotSiteForm : Error { using Error::Error; };
struct SizeBudgetExceeded : Error { using Error::Error; };
struct HorizonRequired : Error { using Error::Error; };
struct EmptySpace : Error { using Error::Error; };
struct MalformedBasic : Error { using Error::Error; };
struct ModulusUndefined : Error { using Error::Error; };
struct BudgetExhausted : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };

struct Budgets {
  std::size_t max_site_elems = 1u << 16;
  std::size_t max_ideals = 1u << 20;
  int max_free_gens = 5;  // free-lattice cap for the coverage theorem checker
};

}  // namespace pfc

#endif
