#include "vmtaper/vmtaper.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "vmtaper/circular.hpp"
#include "vmtaper/errors.hpp"
#include "vmtaper/metrics.hpp"
#include "vmtaper/special.hpp"
#include "vmtaper/spectra.hpp"
#include "vmtaper/verify.hpp"
#include "vmtaper/windows.hpp"

struct vmt_window {
  vmtaper::WindowSpec spec;
};

struct vmt_report {
  vmtaper::VerificationReport report;
  std::string json;
};

namespace {

using namespace vmtaper;

std::string& last_error() {
  thread_local std::string message;
  return message;
}

vmt_status fail(vmt_status status, const char* message) {
  last_error() = message;
  return status;
}

template <typename F>
vmt_status guarded(F&& body) {
  try {
    body();
    last_error().clear();
    return VMT_OK;
  } catch (const DomainError& e) {
    return fail(VMT_ERR_DOMAIN, e.what());
  } catch (const RangeError& e) {
    return fail(VMT_ERR_RANGE, e.what());
  } catch (const ConvergenceError& e) {
    return fail(VMT_ERR_CONVERGENCE, e.what());
  } catch (const AccuracyError& e) {
    return fail(VMT_ERR_ACCURACY, e.what());
  } catch (const UndefinedMetricError& e) {
    return fail(VMT_ERR_UNDEFINED, e.what());
  } catch (const std::bad_alloc&) {
    return fail(VMT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(VMT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(VMT_ERR_INTERNAL, "unknown error");
  }
}

#define VMT_REQUIRE(ptr)                                  \
  do {                                                    \
    if ((ptr) == nullptr) {                               \
      return fail(VMT_ERR_NULL, #ptr " must not be NULL"); \
    }                                                     \
  } while (0)

Family make_family(vmt_family f, double parameter) {
  switch (f) {
    case VMT_FAMILY_RECTANGULAR:
      return family::Rectangular{};
    case VMT_FAMILY_GENERAL_COSINE:
      return family::GeneralizedCosine{parameter};
    case VMT_FAMILY_COSINE_TIP:
      return family::CosineTip{};
    case VMT_FAMILY_KAISER:
      return family::Kaiser{parameter};
    case VMT_FAMILY_VON_MISES:
      return family::VonMises{parameter};
  }
  throw DomainError("unknown window family");
}

Route make_route(vmt_route r) {
  switch (r) {
    case VMT_ROUTE_ORACLE:
      return Route::oracle;
    case VMT_ROUTE_SERIES:
      return Route::series;
    case VMT_ROUTE_CLOSED:
      return Route::closed;
  }
  throw DomainError("unknown spectrum route");
}

Subject make_subject(vmt_subject s) {
  switch (s) {
    case VMT_SUBJECT_VM_CLOSED_VS_ORACLE:
      return Subject::vm_spectrum_closed_vs_oracle;
    case VMT_SUBJECT_VM_SERIES_VS_ORACLE:
      return Subject::vm_spectrum_series_vs_oracle;
    case VMT_SUBJECT_KAISER_CLOSED_VS_ORACLE:
      return Subject::kaiser_closed_vs_oracle;
    case VMT_SUBJECT_CARDINAL_VS_ORACLE:
      return Subject::cardinal_reconstruction_vs_oracle;
    case VMT_SUBJECT_VM_CDF_PAPER_VS_NUMERIC:
      return Subject::vm_cdf_paper_vs_numeric;
  }
  throw DomainError("unknown verification subject");
}

RouteOptions make_options(const vmt_spectrum_options* o) {
  RouteOptions opts;
  if (o != nullptr) {
    opts.abs_tol = o->abs_tol;
    opts.trunc = SeriesTruncation(o->series_tol, o->series_max_terms);
  }
  return opts;
}

VerificationParams make_params(const vmt_verify_params* p) {
  VerificationParams params;
  if (p != nullptr) {
    params.beta = p->beta;
    params.length = p->length;
    params.mu = p->mu;
    params.kappa = p->kappa;
    params.sample_rate = p->sample_rate;
    params.sample_count = p->sample_count;
    params.abs_tol = p->abs_tol;
    params.trunc = SeriesTruncation(p->series_tol, p->series_max_terms);
    params.threads = p->threads;
  }
  return params;
}

}  // namespace

extern "C" {

const char* vmt_last_error(void) { return last_error().c_str(); }

const char* vmt_status_name(vmt_status status) {
  switch (status) {
    case VMT_OK:
      return "ok";
    case VMT_ERR_DOMAIN:
      return "domain error";
    case VMT_ERR_RANGE:
      return "range error";
    case VMT_ERR_CONVERGENCE:
      return "convergence error";
    case VMT_ERR_ACCURACY:
      return "accuracy error";
    case VMT_ERR_UNDEFINED:
      return "undefined metric";
    case VMT_ERR_NULL:
      return "null argument";
    case VMT_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

vmt_status vmt_sa(double x, double* out) {
  VMT_REQUIRE(out);
  return guarded([&] { *out = sa(x); });
}

vmt_status vmt_bessel_i(double order, double z, double* out) {
  VMT_REQUIRE(out);
  return guarded([&] { *out = bessel_i(BesselOrder(order), z); });
}

vmt_status vmt_bessel_i_scaled(double order, double z, double* out) {
  VMT_REQUIRE(out);
  return guarded([&] { *out = bessel_i_scaled(BesselOrder(order), z); });
}

vmt_status vmt_vm_pdf(double mu, double kappa, double x, double* out) {
  VMT_REQUIRE(out);
  return guarded([&] { *out = vm_pdf(VonMisesParams(mu, kappa), x); });
}

vmt_status vmt_vm_pdf_periodic(double mu, double kappa, double x, double* out) {
  VMT_REQUIRE(out);
  return guarded([&] { *out = vm_pdf_periodic(VonMisesParams(mu, kappa), x); });
}

vmt_status vmt_vm_cdf(double mu, double kappa, double x, double* out) {
  VMT_REQUIRE(out);
  return guarded([&] { *out = vm_cdf_numeric(VonMisesParams(mu, kappa), x); });
}

vmt_status vmt_window_create(vmt_family family, double parameter, double length,
                             vmt_alignment alignment, vmt_window** out) {
  VMT_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const Alignment a = alignment == VMT_CAUSAL ? Alignment::causal : Alignment::centered;
    if (alignment != VMT_CAUSAL && alignment != VMT_CENTERED) {
      throw DomainError("unknown alignment");
    }
    *out = new vmt_window{WindowSpec(make_family(family, parameter), length, a)};
  });
}

void vmt_window_destroy(vmt_window* window) { delete window; }

vmt_status vmt_window_support(const vmt_window* window, double* begin, double* end) {
  VMT_REQUIRE(window);
  VMT_REQUIRE(begin);
  VMT_REQUIRE(end);
  *begin = window->spec.support_begin();
  *end = window->spec.support_end();
  last_error().clear();
  return VMT_OK;
}

vmt_status vmt_window_evaluate(const vmt_window* window, double t, double* out) {
  VMT_REQUIRE(window);
  VMT_REQUIRE(out);
  return guarded([&] { *out = evaluate(window->spec, t); });
}

vmt_status vmt_window_sample(const vmt_window* window, size_t count, double* times,
                             double* values) {
  VMT_REQUIRE(window);
  VMT_REQUIRE(times);
  VMT_REQUIRE(values);
  return guarded([&] {
    const SampledWindow s = sample(window->spec, count);
    for (size_t i = 0; i < count; ++i) {
      times[i] = s.times[i];
      values[i] = s.values[i];
    }
  });
}

void vmt_spectrum_options_default(vmt_spectrum_options* options) {
  if (options == nullptr) {
    return;
  }
  const RouteOptions defaults;
  options->abs_tol = defaults.abs_tol;
  options->series_tol = defaults.trunc.tol();
  options->series_max_terms = defaults.trunc.max_terms();
  options->threads = 1;
}

vmt_status vmt_spectrum(const vmt_window* window, vmt_route route, double w,
                        const vmt_spectrum_options* options, double* re, double* im) {
  VMT_REQUIRE(window);
  VMT_REQUIRE(re);
  VMT_REQUIRE(im);
  return guarded([&] {
    const Complex v = causal_spectrum(make_route(route), window->spec, w, make_options(options));
    *re = v.real();
    *im = v.imag();
  });
}

vmt_status vmt_spectrum_grid(const vmt_window* window, vmt_route route, const double* w,
                             size_t count, const vmt_spectrum_options* options, double* re,
                             double* im) {
  VMT_REQUIRE(window);
  VMT_REQUIRE(w);
  VMT_REQUIRE(re);
  VMT_REQUIRE(im);
  return guarded([&] {
    const unsigned threads = options != nullptr ? options->threads : 1;
    const auto points = spectrum_on_grid(make_route(route), window->spec, {w, count},
                                         make_options(options), threads);
    for (size_t i = 0; i < count; ++i) {
      re[i] = points[i].value.real();
      im[i] = points[i].value.imag();
    }
  });
}

vmt_status vmt_window_metrics(const vmt_window* window, double band_bins, int samples_per_bin,
                              vmt_metrics* out) {
  VMT_REQUIRE(window);
  VMT_REQUIRE(out);
  return guarded([&] {
    MetricsGrid grid;
    if (band_bins > 0.0) {
      grid.band_bins = band_bins;
    }
    if (samples_per_bin > 0) {
      grid.samples_per_bin = samples_per_bin;
    }
    const WindowMetrics m = compute_metrics(window->spec, grid);
    *out = vmt_metrics{};
    out->coherent_gain = m.coherent_gain;
    if (m.enbw_bins) {
      out->enbw_bins = *m.enbw_bins;
      out->valid |= VMT_METRIC_ENBW;
    }
    if (m.mainlobe_width_3db_bins) {
      out->mainlobe_3db_bins = *m.mainlobe_width_3db_bins;
      out->valid |= VMT_METRIC_MAINLOBE;
    }
    if (m.first_null_bins) {
      out->first_null_bins = *m.first_null_bins;
      out->valid |= VMT_METRIC_FIRST_NULL;
    }
    if (m.peak_sidelobe_db) {
      out->peak_sidelobe_db = *m.peak_sidelobe_db;
      out->valid |= VMT_METRIC_SIDELOBE;
    }
  });
}

void vmt_verify_params_default(vmt_verify_params* params) {
  if (params == nullptr) {
    return;
  }
  const VerificationParams d;
  params->beta = d.beta;
  params->length = d.length;
  params->mu = d.mu;
  params->kappa = d.kappa;
  params->sample_rate = d.sample_rate;
  params->sample_count = d.sample_count;
  params->abs_tol = d.abs_tol;
  params->series_tol = d.trunc.tol();
  params->series_max_terms = d.trunc.max_terms();
  params->threads = d.threads;
}

vmt_status vmt_subject_from_name(const char* name, vmt_subject* out) {
  VMT_REQUIRE(name);
  VMT_REQUIRE(out);
  const auto s = subject_from_name(name);
  if (!s) {
    return fail(VMT_ERR_DOMAIN, (std::string("unknown verification subject '") + name + "'").c_str());
  }
  *out = static_cast<vmt_subject>(static_cast<int>(*s));
  last_error().clear();
  return VMT_OK;
}

const char* vmt_subject_name(vmt_subject subject) {
  try {
    return subject_name(make_subject(subject)).data();
  } catch (const std::exception&) {
    return "unknown";
  }
}

vmt_status vmt_verify_default_grid(vmt_subject subject, const vmt_verify_params* params,
                                   double* grid, size_t* count) {
  VMT_REQUIRE(count);
  return guarded([&] {
    const auto g = default_grid(make_subject(subject), make_params(params));
    if (grid == nullptr) {
      *count = g.size();
      return;
    }
    if (*count < g.size()) {
      throw DomainError("grid capacity too small: need " + std::to_string(g.size()));
    }
    for (size_t i = 0; i < g.size(); ++i) {
      grid[i] = g[i];
    }
    *count = g.size();
  });
}

vmt_status vmt_verify_run(vmt_subject subject, const vmt_verify_params* params, const double* grid,
                          size_t count, vmt_report** out) {
  VMT_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const Subject s = make_subject(subject);
    const VerificationParams p = make_params(params);
    std::vector<double> g;
    if (grid == nullptr) {
      g = default_grid(s, p);
    } else {
      g.assign(grid, grid + count);
    }
    auto report = run_verification(s, p, g);
    std::string json = report.to_json();
    *out = new vmt_report{std::move(report), std::move(json)};
  });
}

void vmt_report_destroy(vmt_report* report) { delete report; }

int vmt_report_outcome(const vmt_report* report) {
  if (report == nullptr || !report->report.passed) {
    return -1;
  }
  return *report->report.passed ? 1 : 0;
}

double vmt_report_max_abs_deviation(const vmt_report* report) {
  return report != nullptr ? report->report.max_abs_deviation : 0.0;
}

double vmt_report_max_rel_deviation(const vmt_report* report) {
  return report != nullptr ? report->report.max_rel_deviation : 0.0;
}

double vmt_report_rms_deviation(const vmt_report* report) {
  return report != nullptr ? report->report.rms_deviation : 0.0;
}

vmt_status vmt_report_worst_point(const vmt_report* report, double* abscissa, double* value_re,
                                  double* value_im, double* ref_re, double* ref_im) {
  VMT_REQUIRE(report);
  VMT_REQUIRE(abscissa);
  VMT_REQUIRE(value_re);
  VMT_REQUIRE(value_im);
  VMT_REQUIRE(ref_re);
  VMT_REQUIRE(ref_im);
  const auto& wp = report->report.worst_point;
  *abscissa = wp.abscissa;
  *value_re = wp.value.real();
  *value_im = wp.value.imag();
  *ref_re = wp.reference.real();
  *ref_im = wp.reference.imag();
  last_error().clear();
  return VMT_OK;
}

const char* vmt_report_json(const vmt_report* report) {
  return report != nullptr ? report->json.c_str() : "";
}

}  // extern "C"
