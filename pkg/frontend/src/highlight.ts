// Answer-span rendering. The service guarantees answer.text is verbatim
// context text, so locating it by substring search always succeeds and the
// highlighted region reproduces it character for character.

export interface CharSpan {
  start: number;
  end: number;
}

/** Character offsets of the answer's earliest occurrence in the document. */
export function locateAnswer(content: string, answerText: string): CharSpan {
  const start = content.indexOf(answerText);
  if (start < 0) {
    throw new Error("answer text is not a substring of the document");
  }
  return { start, end: start + answerText.length };
}

/**
 * Replace container's content with the document text, wrapping the span
 * in a <mark>. Returns the mark so callers can assert or scroll to it.
 */
export function renderHighlighted(
  container: HTMLElement,
  content: string,
  span: CharSpan,
): HTMLElement {
  if (span.start < 0 || span.end > content.length || span.start > span.end) {
    throw new Error(`span [${span.start}, ${span.end}) outside the document`);
  }
  container.textContent = "";
  container.appendChild(document.createTextNode(content.slice(0, span.start)));
  const mark = document.createElement("mark");
  mark.className = "answer-span";
  mark.textContent = content.slice(span.start, span.end);
  container.appendChild(mark);
  container.appendChild(document.createTextNode(content.slice(span.end)));
  return mark;
}
