import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

const here = dirname(fileURLToPath(import.meta.url));

/** Load a JSON fixture captured from a real served toy run. */
export function fixture<T>(name: string): T {
  const raw = readFileSync(join(here, "fixtures", name), "utf8");
  return JSON.parse(raw) as T;
}

export const FIXTURES_DIR = join(here, "fixtures");
