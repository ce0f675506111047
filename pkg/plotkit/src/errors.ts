export class MissingColumnError extends Error {
  constructor(column: string, file: string) {
    super(`column "${column}" not found in ${file}`);
    this.name = "MissingColumnError";
  }
}

export class EmptyInputError extends Error {
  constructor(detail: string) {
    super(detail);
    this.name = "EmptyInputError";
  }
}
