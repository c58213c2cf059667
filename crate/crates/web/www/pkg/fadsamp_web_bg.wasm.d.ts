/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_evaluation_free: (a: number, b: number) => void;
export const __wbg_get_evaluation_im: (a: number) => number;
export const __wbg_get_evaluation_log10_error: (a: number) => number;
export const __wbg_get_evaluation_re: (a: number) => number;
export const __wbg_get_evaluation_reflected: (a: number) => number;
export const __wbg_get_evaluation_regime: (a: number) => number;
export const __wbg_set_evaluation_im: (a: number, b: number) => void;
export const __wbg_set_evaluation_log10_error: (a: number, b: number) => void;
export const __wbg_set_evaluation_re: (a: number, b: number) => void;
export const __wbg_set_evaluation_reflected: (a: number, b: number) => void;
export const __wbg_set_evaluation_regime: (a: number, b: number) => void;
export const evaluate: (a: number, b: number) => [number, number, number];
export const render_field: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number, number];
export const voigt_profile: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
