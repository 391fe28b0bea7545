from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name='ComputationRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('system', models.CharField(max_length=255)),
                ('algorithm', models.CharField(choices=[('buchberger', 'Buchberger'), ('f5b', 'F5B'), ('f5b-fast', 'F5B with fast reduction')], max_length=16)),
                ('reduction', models.CharField(blank=True, default='', max_length=16)),
                ('field', models.CharField(max_length=64)),
                ('order', models.CharField(max_length=16)),
                ('variables', models.JSONField(default=list)),
                ('generator_count', models.PositiveIntegerField()),
                ('variable_count', models.PositiveIntegerField()),
                ('degree_bound', models.PositiveIntegerField()),
                ('basis', models.JSONField(default=list)),
                ('counters', models.JSONField(default=dict)),
                ('predicted', models.JSONField(default=dict)),
                ('verified', models.BooleanField(blank=True, null=True)),
                ('elapsed_ms', models.PositiveIntegerField(default=0)),
                ('created_at', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'ordering': ('-created_at', '-id'),
                'indexes': [models.Index(fields=['system', 'algorithm'], name='runs_run_system_algo_idx')],
            },
        ),
    ]
