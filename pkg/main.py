import logging
import sys
from pathlib import Path
from commandhandler import CommandHandler

def main(argv:list[str])->int:
   """
   Executa um comando da CLI (check, enumerate, birkhoff, orbits, example34, fp-eval, fp-sample, decompose), escrevendo o
   relatório no stdout e acrescentando o log da execução no arquivo de logs (--log-file, padrão coupling_runs.log)

   Args:
      argv (list[str]): vetor de argumentos da linha de comando, com o primeiro sendo o própio arquivo

   Return:
      (int): código de saída, 0 sucesso, 1 checagem pedida falhou, 2 entrada inválida, 3 limite de recursos
   """
   logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
   handler = CommandHandler()
   args = handler.parse(argv[1:])
   code, log = handler.execute(args)

   try:
      with open(Path(args.log_file), "a") as f:
         f.write(str(log))
         f.write("\n")
   except OSError as e:
      print("Falha ao salvar o arquivo de logs: ", e, file=sys.stderr)
   return code

if __name__ == "__main__":
   sys.exit(main(sys.argv))
