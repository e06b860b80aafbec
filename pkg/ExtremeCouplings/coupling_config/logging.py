from datetime import datetime,timedelta

class CommandRunLog:
   """
   Classe que contém informação de uma execução de um comando da CLI (check, enumerate, birkhoff...).
   Usada no sistema de logging e para o campo de timing dos relatórios JSON
   """
   command_name:str
   step_logs:list['StepLog']
   start_date:datetime
   finish_date: datetime
   elapsed_time: timedelta
   extra_info:str

   def __init__(self, command_name: str, step_logs: list['StepLog'] | None = None, start_date:datetime | None = None,
                 finish_date: datetime | None = None, elapsed_time: timedelta = timedelta(0), extra_info: str = ""):
        self.command_name = command_name
        self.step_logs = step_logs if step_logs is not None else []
        self.start_date = start_date if start_date is not None else datetime.now()
        self.finish_date = finish_date if finish_date is not None else self.start_date
        self.elapsed_time = elapsed_time
        self.extra_info = extra_info

   @classmethod
   def error_log(cls, command_name:str, error_message: str) -> 'CommandRunLog':
        return cls(
            command_name=command_name,
            step_logs=[],
            start_date=datetime.now(),
            extra_info=error_message
        )

   def add_step(self, step_name:str, items:int = 0, detail:str = "")->None:
      self.step_logs.append(StepLog(step_name,items,detail))

   def finish(self)->None:
      """
      Marca o fim da execução e calcula o tempo gasto
      """
      self.finish_date = datetime.now()
      self.elapsed_time = self.finish_date - self.start_date

   def timing(self)->dict:
      """
      Dict com os tempos da execução, no formato que vai para o relatório JSON
      """
      return {
         "started": self.start_date.isoformat(timespec="seconds"),
         "finished": self.finish_date.isoformat(timespec="seconds"),
         "elapsed_seconds": round(self.elapsed_time.total_seconds(), 6)
      }

   def __str__(self):
      steps_str = "\n-> ".join([f"{step}" for step in self.step_logs])
      steps_str = "\n-> "  + steps_str  + "\n"
      return (
           f"\nCommand: {self.command_name}\n"
           f"Finish Date: {self.finish_date.strftime('%Y-%m-%d %H:%M:%S')}\n"
           f"Elapsed Time: {self.elapsed_time}\n"
           f"Info: {self.extra_info}\n"
           f"Steps:\n{steps_str}"
      )


class StepLog:

   step_name:str
   items:int
   detail:str

   def __init__(self, step_name: str, items: int = 0, detail: str = ""):
        self.step_name = step_name
        self.items = items
        self.detail = detail

   def __str__(self):
      return (
           f"Step: {self.step_name}\n" +
           f"     Items: {self.items}\n" +
           f"     Detail: {self.detail}"
      )
