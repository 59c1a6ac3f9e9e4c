/**
 * The nine linguistic grades decision makers choose from, with their
 * triangular fuzzy values shown so the scale is transparent in the UI.
 *
 * Display data only: the console submits the label and the service does
 * all fuzzy arithmetic.
 */

export interface GradeOption {
  label: string;
  tfn: readonly [number, number, number];
}

export const GRADES: readonly GradeOption[] = [
  { label: 'Equally Important', tfn: [1, 1, 1] },
  { label: 'Equally to Moderately Important', tfn: [1, 2, 3] },
  { label: 'Moderately Important', tfn: [2, 3, 4] },
  { label: 'Moderately to Strongly Important', tfn: [3, 4, 5] },
  { label: 'Strongly Important', tfn: [4, 5, 6] },
  { label: 'Strongly to Very Strongly Important', tfn: [5, 6, 7] },
  { label: 'Very Strongly Important', tfn: [6, 7, 8] },
  { label: 'Very Strongly to Extremely Important', tfn: [7, 8, 9] },
  { label: 'Extremely Important', tfn: [8, 9, 9] },
];

export function gradeDisplay(option: GradeOption): string {
  const [l, m, u] = option.tfn;
  return `${option.label} (${l}, ${m}, ${u})`;
}
