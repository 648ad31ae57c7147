/*
 * vmtaper C API.
 *
 * Continuous-time windows (rectangular, generalized cosine, cosine tip,
 * Kaiser, von Mises), their spectra along three routes, spectral figures of
 * merit and cross-route verification reports.
 *
 * Every function returns a vmt_status. On failure the thread-local message
 * returned by vmt_last_error() describes the problem. Handles are opaque,
 * immutable after creation and may be shared between threads.
 */
#ifndef VMTAPER_H
#define VMTAPER_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(VMTAPER_BUILDING)
#    define VMT_API __declspec(dllexport)
#  else
#    define VMT_API __declspec(dllimport)
#  endif
#else
#  define VMT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vmt_status {
  VMT_OK = 0,
  VMT_ERR_DOMAIN = 1,      /* argument outside the operation's domain */
  VMT_ERR_RANGE = 2,       /* result overflows double precision */
  VMT_ERR_CONVERGENCE = 3, /* series term cap reached */
  VMT_ERR_ACCURACY = 4,    /* quadrature subdivision budget exhausted */
  VMT_ERR_UNDEFINED = 5,   /* figure of merit undefined for this window */
  VMT_ERR_NULL = 6,        /* required pointer argument was NULL */
  VMT_ERR_INTERNAL = 7
} vmt_status;

typedef enum vmt_family {
  VMT_FAMILY_RECTANGULAR = 0,
  VMT_FAMILY_GENERAL_COSINE = 1, /* parameter = alpha in [0, 1] */
  VMT_FAMILY_COSINE_TIP = 2,
  VMT_FAMILY_KAISER = 3,         /* parameter = beta >= 0 */
  VMT_FAMILY_VON_MISES = 4       /* parameter = beta >= 0 */
} vmt_family;

typedef enum vmt_alignment { VMT_CENTERED = 0, VMT_CAUSAL = 1 } vmt_alignment;

typedef enum vmt_route {
  VMT_ROUTE_ORACLE = 0, /* adaptive quadrature of the Fourier integral */
  VMT_ROUTE_SERIES = 1, /* Bessel-weighted Sa series (von Mises only) */
  VMT_ROUTE_CLOSED = 2  /* closed form of the family */
} vmt_route;

typedef enum vmt_subject {
  VMT_SUBJECT_VM_CLOSED_VS_ORACLE = 0,
  VMT_SUBJECT_VM_SERIES_VS_ORACLE = 1,
  VMT_SUBJECT_KAISER_CLOSED_VS_ORACLE = 2,
  VMT_SUBJECT_CARDINAL_VS_ORACLE = 3,
  VMT_SUBJECT_VM_CDF_PAPER_VS_NUMERIC = 4
} vmt_subject;

typedef struct vmt_window vmt_window;
typedef struct vmt_report vmt_report;

/* Message for the most recent failure on the calling thread ("" if none). */
VMT_API const char* vmt_last_error(void);
VMT_API const char* vmt_status_name(vmt_status status);

/* ---- special functions and circular distribution ---- */

VMT_API vmt_status vmt_sa(double x, double* out);
VMT_API vmt_status vmt_bessel_i(double order, double z, double* out);
VMT_API vmt_status vmt_bessel_i_scaled(double order, double z, double* out);
VMT_API vmt_status vmt_vm_pdf(double mu, double kappa, double x, double* out);
VMT_API vmt_status vmt_vm_pdf_periodic(double mu, double kappa, double x, double* out);
VMT_API vmt_status vmt_vm_cdf(double mu, double kappa, double x, double* out);

/* ---- windows ---- */

/* parameter is ignored for rectangular and cosine-tip windows. */
VMT_API vmt_status vmt_window_create(vmt_family family, double parameter, double length,
                                     vmt_alignment alignment, vmt_window** out);
VMT_API void vmt_window_destroy(vmt_window* window);

VMT_API vmt_status vmt_window_support(const vmt_window* window, double* begin, double* end);
VMT_API vmt_status vmt_window_evaluate(const vmt_window* window, double t, double* out);

/* Fills count >= 2 uniformly spaced support points (endpoints included). */
VMT_API vmt_status vmt_window_sample(const vmt_window* window, size_t count, double* times,
                                     double* values);

/* ---- spectra ---- */

typedef struct vmt_spectrum_options {
  double abs_tol;       /* quadrature absolute tolerance (default 1e-11) */
  double series_tol;    /* Bessel ratio cut-off (default 1e-14) */
  int series_max_terms; /* default 1000 */
  unsigned threads;     /* grid evaluation threads, 0 = hardware (default 1) */
} vmt_spectrum_options;

VMT_API void vmt_spectrum_options_default(vmt_spectrum_options* options);

/* W(w) along route; causal windows carry the factor e^{-jwN/2}. options may
 * be NULL for defaults. */
VMT_API vmt_status vmt_spectrum(const vmt_window* window, vmt_route route, double w,
                                const vmt_spectrum_options* options, double* re, double* im);

VMT_API vmt_status vmt_spectrum_grid(const vmt_window* window, vmt_route route, const double* w,
                                     size_t count, const vmt_spectrum_options* options, double* re,
                                     double* im);

/* ---- metrics ---- */

enum {
  VMT_METRIC_ENBW = 1u << 0,
  VMT_METRIC_MAINLOBE = 1u << 1,
  VMT_METRIC_FIRST_NULL = 1u << 2,
  VMT_METRIC_SIDELOBE = 1u << 3
};

typedef struct vmt_metrics {
  double coherent_gain;
  double enbw_bins;
  double mainlobe_3db_bins;
  double first_null_bins;
  double peak_sidelobe_db;
  unsigned valid; /* VMT_METRIC_* bits for the fields that are defined */
} vmt_metrics;

/* band_bins <= 0 or samples_per_bin <= 0 select the defaults (40, 64). */
VMT_API vmt_status vmt_window_metrics(const vmt_window* window, double band_bins,
                                      int samples_per_bin, vmt_metrics* out);

/* ---- verification ---- */

typedef struct vmt_verify_params {
  double beta;
  double length;
  double mu;
  double kappa;
  double sample_rate;  /* cardinal w_s, 0 = pi / N */
  size_t sample_count; /* cardinal samples per sign of n */
  double abs_tol;
  double series_tol;
  int series_max_terms;
  unsigned threads;
} vmt_verify_params;

VMT_API void vmt_verify_params_default(vmt_verify_params* params);
VMT_API vmt_status vmt_subject_from_name(const char* name, vmt_subject* out);
VMT_API const char* vmt_subject_name(vmt_subject subject);

/* Writes the subject's default grid. Call with grid == NULL to query the
 * size into *count; otherwise *count is the capacity on input. */
VMT_API vmt_status vmt_verify_default_grid(vmt_subject subject, const vmt_verify_params* params,
                                           double* grid, size_t* count);

/* grid == NULL selects the subject's default grid. */
VMT_API vmt_status vmt_verify_run(vmt_subject subject, const vmt_verify_params* params,
                                  const double* grid, size_t count, vmt_report** out);
VMT_API void vmt_report_destroy(vmt_report* report);

/* 1 = passed, 0 = failed, -1 = report-only. */
VMT_API int vmt_report_outcome(const vmt_report* report);
VMT_API double vmt_report_max_abs_deviation(const vmt_report* report);
VMT_API double vmt_report_max_rel_deviation(const vmt_report* report);
VMT_API double vmt_report_rms_deviation(const vmt_report* report);
/* Worst point: abscissa, value of the route under test, reference value. */
VMT_API vmt_status vmt_report_worst_point(const vmt_report* report, double* abscissa,
                                          double* value_re, double* value_im, double* ref_re,
                                          double* ref_im);
/* JSON serialization; the string lives as long as the report. */
VMT_API const char* vmt_report_json(const vmt_report* report);

#ifdef __cplusplus
}
#endif

#endif /* VMTAPER_H */
