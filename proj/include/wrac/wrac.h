#ifndef WRAC_H
#define WRAC_H

/* C interface to the box-contact realization library. Inputs and outputs are
 * JSON strings (rationals as "num" or "num/den"); SVG comes back as text.
 * Every output string is heap-allocated and must be released with
 * wrac_string_free. On WRAC_ERR_INFEASIBLE the output carries a certificate
 * instead of a drawing; on any other error the output is left NULL and
 * wrac_ctx_error holds a message. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wrac_status {
    WRAC_OK = 0,
    WRAC_ERR_INVALID_ARGUMENT = 1,
    WRAC_ERR_PARSE = 2,
    WRAC_ERR_INFEASIBLE = 3,
    WRAC_ERR_UNSUPPORTED = 4,
    WRAC_ERR_INTERNAL = 5
} wrac_status;

/* Opaque session: owns the last error message. Not thread-shared. */
typedef struct wrac_ctx wrac_ctx;

wrac_ctx* wrac_ctx_new(void);
void wrac_ctx_free(wrac_ctx* ctx);

/* Message for the most recent failing call on this ctx; "" after success. */
const char* wrac_ctx_error(const wrac_ctx* ctx);

const char* wrac_version(void);
void wrac_string_free(char* s);

/* Contact representation of a quasi-triangulated instance. The instance JSON
 * needs "boxes", "edges", and the four "outer" ids; returns the placed boxes
 * or an infeasibility certificate (frozen staircase frontier). */
wrac_status wrac_realize_quasi(wrac_ctx* ctx, const char* instance_json, char** out_json);

/* Hierarchical drawing of an embedded single-sink DAG instance ("boxes",
 * "edges" as from/to, "rotation"). Returns the drawing or a phase
 * certificate (orientation vertex, vertical conflict, or constraint cycle). */
wrac_status wrac_hierarchy_solve(wrac_ctx* ctx, const char* hi_json, char** out_json);

/* Profit maximization. options_json: {"strategy": "auto|star|starforest|
 * cyclecover|extremal|disjoint", "corner_cap": int}, NULL for defaults.
 * Returns {"strategy", "pick", "guarantee_denom", "representation", "eval"}. */
wrac_status wrac_maximize(wrac_ctx* ctx, const char* instance_json, const char* options_json,
                          char** report_json);

/* Contact-maximizing layout of the instance's boxes (edges ignored). */
wrac_status wrac_extremal(wrac_ctx* ctx, const char* instance_json, char** rep_json);

/* Instance generators. kind: "3part" ({"s": [ints], "B": int, "partition":
 * [[i,j,k], ...] optional}), "knapstar" ({"items": [{"w", "p"}, ...],
 * "capacity", "target"}), "strippath" ({"rects": [[w, h], ...],
 * "strip_width", "height_bound", "epsilon", "max_boxes" optional}),
 * "expsquares" ({"n": int}). Returns {"instance", "provenance", ...}. */
wrac_status wrac_generate(wrac_ctx* ctx, const char* kind, const char* params_json,
                          char** out_json);

/* Exact optimum profit over all representations, by exhaustive search of
 * contact profiles. Refuses instances with more than max_n boxes (max_n <= 0
 * uses the built-in cap of 5). Returns {"opt": rational}. */
wrac_status wrac_oracle_opt(wrac_ctx* ctx, const char* instance_json, int max_n,
                            char** out_json);

/* Scores a representation against an instance: {"profit", "total",
 * "planar_total", "percent_of_total", "percent_of_planar", "contacts",
 * "realized_edges"}. */
wrac_status wrac_evaluate(wrac_ctx* ctx, const char* instance_json, const char* rep_json,
                          char** report_json);

/* SVG for a representation. labels_json maps box ids to display text (NULL
 * or {} to label with ids); contact_overlay != 0 draws contact segments. */
wrac_status wrac_render_svg(wrac_ctx* ctx, const char* rep_json, const char* labels_json,
                            int contact_overlay, char** svg);

/* Text ingestion to a supporting-graph instance. config_json (all optional):
 * {"top_k": int, "base_size", "char_width", "line_height", "threshold":
 * rationals, "stopwords": "english"|"none"}; NULL for defaults. */
wrac_status wrac_text_to_instance(wrac_ctx* ctx, const char* text, const char* config_json,
                                  char** instance_json);

/* Full pipeline: ingest, similarity profits, planar subgraph, star-forest
 * layout, SVG labeled with surface forms. report_json is the evaluate()
 * report plus term and edge counts. */
wrac_status wrac_cloud(wrac_ctx* ctx, const char* text, const char* config_json, char** svg,
                       char** report_json);

/* Bundled public-domain sample texts. */
wrac_status wrac_bundled_text_ids(wrac_ctx* ctx, char** ids_json);
wrac_status wrac_bundled_text(wrac_ctx* ctx, const char* id, char** text);

#ifdef __cplusplus
}
#endif

#endif /* WRAC_H */
