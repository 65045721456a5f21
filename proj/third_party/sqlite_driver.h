/* C-compatible function table over a statically embedded SQLite build.
 *
 * Each vendored amalgamation is compiled into its own translation unit with
 * SQLITE_API mapped to static, so several SQLite versions can coexist in one
 * process. Callers only see opaque handles and this table. */
#ifndef QPG_SQLITE_DRIVER_H
#define QPG_SQLITE_DRIVER_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qpg_sqlite_driver {
  const char *(*libversion)(void);
  int (*open_v2)(const char *filename, void **db, int flags, const char *vfs);
  int (*close)(void *db);
  int (*prepare_v2)(void *db, const char *sql, int nbyte, void **stmt,
                    const char **tail);
  int (*step)(void *stmt);
  int (*finalize)(void *stmt);
  int (*column_count)(void *stmt);
  int (*column_type)(void *stmt, int col);
  long long (*column_int64)(void *stmt, int col);
  double (*column_double)(void *stmt, int col);
  const unsigned char *(*column_text)(void *stmt, int col);
  int (*column_bytes)(void *stmt, int col);
  const void *(*column_blob)(void *stmt, int col);
  const char *(*errmsg)(void *db);
  int (*extended_errcode)(void *db);
  void (*progress_handler)(void *db, int nops, int (*cb)(void *), void *arg);
  int (*changes)(void *db);
} qpg_sqlite_driver;

/* 3.50.2, the build the harness tests by default. */
const qpg_sqlite_driver *qpg_sqlite_driver_current(void);
/* 3.38.5, pinned build predating the 2022 logic-bug fixes. */
const qpg_sqlite_driver *qpg_sqlite_driver_3_38_5(void);

#ifdef __cplusplus
}
#endif

#endif /* QPG_SQLITE_DRIVER_H */
