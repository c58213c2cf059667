/* tslint:disable */
/* eslint-disable */

/**
 * One evaluation of `w(z)`.
 */
export class Evaluation {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    im: number;
    /**
     * `log10` of the larger relative part error against the reference, or
     * NaN outside the reference window.
     */
    log10_error: number;
    re: number;
    reflected: boolean;
    /**
     * `0` continued fraction, `1` shifted rational form, `2` pole-free form.
     */
    regime: number;
}

/**
 * What [`render_field`] colours.
 */
export enum FieldMode {
    /**
     * Hue from `arg w`, lightness from `log |w|`.
     */
    Phase = 0,
    /**
     * Which evaluator serves each pixel.
     */
    Regime = 1,
    /**
     * `log10` relative error of the real part, `-17..-11`.
     */
    ErrorRe = 2,
    /**
     * `log10` relative error of the imaginary part, `-17..-11`.
     */
    ErrorIm = 3,
}

/**
 * Evaluates `w(x + iy)`.
 */
export function evaluate(x: number, y: number): Evaluation;

/**
 * Renders `mode` over `[xmin, xmax] x [ymin, ymax]` as `width * height`
 * RGBA pixels, top row first (largest `y`).
 */
export function render_field(mode: FieldMode, xmin: number, xmax: number, ymin: number, ymax: number, width: number, height: number): Uint8Array;

/**
 * `K(x, y)` at `n` evenly spaced `x` in `[xmin, xmax]`.
 */
export function voigt_profile(xmin: number, xmax: number, n: number, y: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_evaluation_free: (a: number, b: number) => void;
    readonly __wbg_get_evaluation_im: (a: number) => number;
    readonly __wbg_get_evaluation_log10_error: (a: number) => number;
    readonly __wbg_get_evaluation_re: (a: number) => number;
    readonly __wbg_get_evaluation_reflected: (a: number) => number;
    readonly __wbg_get_evaluation_regime: (a: number) => number;
    readonly __wbg_set_evaluation_im: (a: number, b: number) => void;
    readonly __wbg_set_evaluation_log10_error: (a: number, b: number) => void;
    readonly __wbg_set_evaluation_re: (a: number, b: number) => void;
    readonly __wbg_set_evaluation_reflected: (a: number, b: number) => void;
    readonly __wbg_set_evaluation_regime: (a: number, b: number) => void;
    readonly evaluate: (a: number, b: number) => [number, number, number];
    readonly render_field: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number, number];
    readonly voigt_profile: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
