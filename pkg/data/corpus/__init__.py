# Corpus machines, loaded by name through core.channel.machine.resolve_machine
