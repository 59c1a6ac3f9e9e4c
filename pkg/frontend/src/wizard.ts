/**
 * Pairwise comparison form. Presents one row per unordered element pair
 * (upper triangle only — the service derives every reciprocal), a grade
 * select showing each linguistic label with its fuzzy triple, and an
 * "inverted" toggle for when the column element dominates the row element.
 *
 * The form is plain state plus a pure HTML renderer; no comparison
 * arithmetic happens here. Grades travel to the service as labels.
 */

import { JudgmentEntryBody } from './api.js';
import { escapeAttr, escapeHtml } from './html.js';
import { GRADES, gradeDisplay } from './scale.js';
import { RawValue, asArray, asString, field } from './rawJson.js';

export interface ContextInfo {
  contextId: string;
  labels: string[];
}

/** Contexts as the service lists them (GET …/contexts). */
export function contextList(response: RawValue): ContextInfo[] {
  return asArray(response, 'contexts').map((entry) => ({
    contextId: asString(field(entry, 'context_id')),
    labels: asArray(field(entry, 'labels'), 'labels').map((label) => asString(label, 'label')),
  }));
}

export interface PairSelection {
  row: string;
  col: string;
  grade: string | null;
  inverted: boolean;
}

export interface ComparisonFormState {
  contextId: string;
  pairs: PairSelection[];
}

/** One pair per i<j, so n elements yield n*(n-1)/2 rows. */
export function newFormState(context: ContextInfo): ComparisonFormState {
  const pairs: PairSelection[] = [];
  for (let i = 0; i < context.labels.length; i += 1) {
    for (let j = i + 1; j < context.labels.length; j += 1) {
      pairs.push({
        row: context.labels[i]!,
        col: context.labels[j]!,
        grade: null,
        inverted: false,
      });
    }
  }
  return { contextId: context.contextId, pairs };
}

function updatePair(
  state: ComparisonFormState,
  index: number,
  change: Partial<PairSelection>,
): ComparisonFormState {
  const pair = state.pairs[index];
  if (pair === undefined) {
    throw new RangeError(`no pair at index ${index}`);
  }
  const pairs = state.pairs.slice();
  pairs[index] = { ...pair, ...change };
  return { ...state, pairs };
}

export function selectGrade(
  state: ComparisonFormState,
  index: number,
  grade: string | null,
): ComparisonFormState {
  return updatePair(state, index, { grade });
}

export function toggleInverted(
  state: ComparisonFormState,
  index: number,
  inverted: boolean,
): ComparisonFormState {
  return updatePair(state, index, { inverted });
}

export function completionFraction(state: ComparisonFormState): number {
  if (state.pairs.length === 0) return 1;
  const done = state.pairs.filter((p) => p.grade !== null).length;
  return done / state.pairs.length;
}

export function canSubmit(state: ComparisonFormState): boolean {
  return state.pairs.length > 0 && state.pairs.every((p) => p.grade !== null);
}

/** Entries for the judgment endpoint; only defined once every pair is graded. */
export function submissionEntries(state: ComparisonFormState): JudgmentEntryBody[] {
  return state.pairs.map((pair) => {
    if (pair.grade === null) {
      throw new Error(`pair ${pair.row} / ${pair.col} has no grade selected`);
    }
    return {
      row: pair.row,
      col: pair.col,
      grade: pair.grade,
      inverted: pair.inverted,
    };
  });
}

function renderGradeOptions(selected: string | null): string {
  const blank = `<option value=""${selected === null ? ' selected' : ''}>— choose a grade —</option>`;
  const options = GRADES.map(
    (option) =>
      `<option value="${escapeAttr(option.label)}"${
        option.label === selected ? ' selected' : ''
      }>${escapeHtml(gradeDisplay(option))}</option>`,
  );
  return [blank, ...options].join('\n      ');
}

function renderPairRow(pair: PairSelection, index: number): string {
  return `<tr class="pair-row" data-pair-index="${index}">
  <td class="pair-elements">${escapeHtml(pair.row)} <span class="versus">vs</span> ${escapeHtml(pair.col)}</td>
  <td>
    <select class="grade-select" data-pair-index="${index}">
      ${renderGradeOptions(pair.grade)}
    </select>
  </td>
  <td>
    <label class="inverted-toggle">
      <input type="checkbox" class="inverted-input" data-pair-index="${index}"${pair.inverted ? ' checked' : ''}>
      <span>${escapeHtml(pair.col)} dominates</span>
    </label>
  </td>
</tr>`;
}

export function renderWizard(state: ComparisonFormState): string {
  const rows = state.pairs.map(renderPairRow).join('\n');
  const done = state.pairs.filter((p) => p.grade !== null).length;
  const percent = Math.round(completionFraction(state) * 100);
  const disabled = canSubmit(state) ? '' : ' disabled';
  return `<form class="comparison-form" data-context-id="${escapeAttr(state.contextId)}">
  <div class="wizard-progress">
    <progress max="${state.pairs.length}" value="${done}"></progress>
    <span class="progress-text">${done} of ${state.pairs.length} pairs graded (${percent}%)</span>
  </div>
  <table class="pair-table">
    <thead>
      <tr><th>Pair</th><th>Grade</th><th>Direction</th></tr>
    </thead>
    <tbody>
${rows}
    </tbody>
  </table>
  <button type="submit" class="submit-judgments"${disabled}>Submit judgments</button>
</form>`;
}
