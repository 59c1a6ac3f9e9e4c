/**
 * Consistency feedback panel. Shows the verdict banner, the check
 * quantities, and — when the matrix is rejected — the revision hints in
 * the order the service emitted them (worst deviation first).
 *
 * All numbers are carried as the service's own text, never reformatted,
 * and acceptance is decided solely by the report's `accepted` flag.
 */

import { escapeHtml } from './html.js';
import {
  RawValue,
  asArray,
  asBoolean,
  asNumberText,
  asString,
  field,
} from './rawJson.js';

export interface GradeRef {
  grade: string;
  inverted: boolean;
}

export interface RevisionHint {
  row: string;
  col: string;
  current: GradeRef;
  suggested: GradeRef;
  /** deviation magnitude, verbatim service text */
  deviation: string;
}

export interface ReportView {
  contextId: string;
  decisionMakerId: string;
  submissionStatus: string;
  attempts: string;
  n: string;
  lambdaMax: string;
  consistencyIndex: string;
  randomIndex: string;
  consistencyRatio: string;
  gamma: string;
  identification: string;
  direction: string;
  accepted: boolean;
  statusLine: string;
  hints: RevisionHint[];
}

function gradeRef(value: RawValue): GradeRef {
  return {
    grade: asString(field(value, 'grade')),
    inverted: asBoolean(field(value, 'inverted')),
  };
}

/** Pulls the display strings out of a judgment submission response. */
export function reportView(response: RawValue): ReportView {
  const report = field(response, 'report');
  const hints = asArray(field(report, 'advice'), 'advice').map((entry) => ({
    row: asString(field(entry, 'row')),
    col: asString(field(entry, 'col')),
    current: gradeRef(field(entry, 'current')),
    suggested: gradeRef(field(entry, 'suggested')),
    deviation: asNumberText(field(entry, 'deviation'), 'deviation'),
  }));
  return {
    contextId: asString(field(response, 'context_id')),
    decisionMakerId: asString(field(response, 'decision_maker_id')),
    submissionStatus: asString(field(response, 'status')),
    attempts: asNumberText(field(response, 'attempts'), 'attempts'),
    n: asNumberText(field(report, 'n'), 'n'),
    lambdaMax: asNumberText(field(report, 'lambda_max'), 'lambda_max'),
    consistencyIndex: asNumberText(field(report, 'consistency_index'), 'consistency_index'),
    randomIndex: asNumberText(field(report, 'random_index'), 'random_index'),
    consistencyRatio: asNumberText(field(report, 'consistency_ratio'), 'consistency_ratio'),
    gamma: asNumberText(field(report, 'gamma'), 'gamma'),
    identification: asString(field(report, 'identification')),
    direction: asString(field(report, 'direction')),
    accepted: asBoolean(field(report, 'accepted')),
    statusLine: asString(field(report, 'status')),
    hints,
  };
}

function gradeText(ref: GradeRef): string {
  return ref.inverted ? `${ref.grade} (inverted)` : ref.grade;
}

function renderHint(hint: RevisionHint, index: number): string {
  const worst = index === 0 ? ' worst' : '';
  return `<li class="revision-hint${worst}">
  <span class="hint-pair">${escapeHtml(hint.row)} / ${escapeHtml(hint.col)}</span>
  <span class="hint-current">${escapeHtml(gradeText(hint.current))}</span>
  <span class="hint-arrow">&rarr;</span>
  <span class="hint-suggested">${escapeHtml(gradeText(hint.suggested))}</span>
  <span class="hint-deviation">deviation ${escapeHtml(hint.deviation)}</span>
</li>`;
}

export function renderFeedback(view: ReportView): string {
  const bannerClass = view.accepted ? 'accepted' : 'rejected';
  const bannerText = view.accepted ? 'Acceptable' : 'Reject and modify';
  const hintsHtml =
    view.hints.length === 0
      ? ''
      : `
  <section class="revision-advice">
    <h3>Revise these comparisons first</h3>
    <ol class="hint-list">
${view.hints.map(renderHint).join('\n')}
    </ol>
  </section>`;
  return `<div class="consistency-feedback" data-context-id="${escapeHtml(view.contextId)}">
  <div class="feedback-banner ${bannerClass}">${bannerText}</div>
  <p class="status-line">${escapeHtml(view.statusLine)}</p>
  <dl class="check-stats">
    <dt>Matrix size</dt><dd>${escapeHtml(view.n)}</dd>
    <dt>Maximum eigenvalue</dt><dd>${escapeHtml(view.lambdaMax)}</dd>
    <dt>Consistency Index</dt><dd>${escapeHtml(view.consistencyIndex)}</dd>
    <dt>Random Index</dt><dd>${escapeHtml(view.randomIndex)}</dd>
    <dt>Consistency Ratio</dt><dd>${escapeHtml(view.consistencyRatio)}</dd>
    <dt>Threshold</dt><dd>${escapeHtml(view.gamma)}</dd>
    <dt>Identification</dt><dd>${escapeHtml(view.identification)}</dd>
    <dt>Direction</dt><dd>${escapeHtml(view.direction)}</dd>
    <dt>Submission</dt><dd>${escapeHtml(view.submissionStatus)} (attempt ${escapeHtml(view.attempts)})</dd>
  </dl>${hintsHtml}
</div>`;
}
